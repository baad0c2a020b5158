"""Aggregated analysis reports with JSON/CSV serialization.

Big integers (image orders) are serialized as decimal strings so that the
JSON survives readers with 64-bit number limits; to_json/from_json round
trip exactly.
"""

import json
import time
from dataclasses import dataclass

from . import congruence as cg
from .action import orbit, veech_generators
from .analysis import cusp_data, curve_profile
from .congruence import Certificate, coprime_cusp_certificate, deficiency
from .surface import (
    canonical_form,
    cylinders,
    format_origami,
    genus,
    is_reduced,
    origami_to_json,
    stratum,
)

CSV_HEADER = "squares,orbit_label,g,s,l,d,e,f"


@dataclass(frozen=True)
class AnalysisReport:
    origami: dict  # n, r, u, text, canonical (hex)
    geometry: dict  # genus, stratum, reduced, cylinders
    orbit: dict  # d
    cusps: dict  # widths, level, normalised pair, minus_identity
    curve: dict  # mu, e2, e3, s, genus
    deficiency: dict  # m, image_order (str), e, f, verdicts
    extra_moduli: tuple  # extra DeficiencyResult blocks as dicts
    certificates: tuple  # serialized certificates
    timing: float


def _cert_to_dict(cert):
    # normalize tuples to lists so the dict equals its JSON round trip
    data = json.loads(json.dumps(cert.data))
    return {"kind": cert.kind, "data": data, "verdict": cert.verdict}


def _deficiency_block(res, congruence=None, totally=None):
    out = {
        "m": res.m,
        "image_order": str(res.image_order),
        "e": res.e,
        "f": res.f,
    }
    if congruence is not None:
        out["congruence"] = congruence
        out["totally_noncongruence"] = totally
    return out


def analyze(o, extra_moduli=(), with_certificates=False, budget=cg.DEFAULT_BUDGET):
    """Full pipeline on one reduced origami."""
    t0 = time.perf_counter()
    table = orbit(o)
    vg = veech_generators(table)
    cd = cusp_data(table)
    cp = curve_profile(table)
    res = deficiency(vg, cd.level, budget)
    certificates = []
    if with_certificates:
        cert = coprime_cusp_certificate(table)
        if cert is not None:
            certificates.append(cert)
    extra = []
    for m in extra_moduli:
        r = deficiency(vg, m, budget)
        extra.append(_deficiency_block(r))
    return AnalysisReport(
        origami={
            **origami_to_json(o),
            "text": format_origami(o),
            "canonical": canonical_form(o).hex(),
        },
        geometry={
            "genus": genus(o),
            "stratum": list(stratum(o)),
            "reduced": is_reduced(o),
            "cylinders": {
                direction: [
                    [c.width, c.height] for c in cylinders(o, direction)
                ]
                for direction in ("horizontal", "vertical")
            },
        },
        orbit={"d": table.size},
        cusps={
            "widths": [c.width for c in cd.cusps],
            "level": cd.level,
            "normalised_pair": [cd.width_infinity, cd.width_zero],
            "minus_identity": cd.minus_identity,
        },
        curve={
            "mu": cp.mu,
            "e2": cp.e2,
            "e3": cp.e3,
            "s": cp.s,
            "genus": cp.genus,
        },
        deficiency=_deficiency_block(
            res,
            congruence=(res.f == 1),
            totally=(res.e == 1),
        ),
        extra_moduli=tuple(extra),
        certificates=tuple(_cert_to_dict(c) for c in certificates),
        timing=time.perf_counter() - t0,
    )


def to_json(report, indent=None):
    payload = {
        "origami": report.origami,
        "geometry": report.geometry,
        "orbit": report.orbit,
        "cusps": report.cusps,
        "curve": report.curve,
        "deficiency": report.deficiency,
        "extra_moduli": list(report.extra_moduli),
        "certificates": list(report.certificates),
        "timing": report.timing,
    }
    return json.dumps(payload, indent=indent, sort_keys=True)


def from_json(text):
    data = json.loads(text)
    return AnalysisReport(
        origami=data["origami"],
        geometry=data["geometry"],
        orbit=data["orbit"],
        cusps=data["cusps"],
        curve=data["curve"],
        deficiency=data["deficiency"],
        extra_moduli=tuple(data["extra_moduli"]),
        certificates=tuple(data["certificates"]),
        timing=data["timing"],
    )


def certificate_from_dict(d):
    return Certificate(d["kind"], dict(d["data"]), d["verdict"])


def csv_row(report, squares=None, orbit_label=""):
    """One row in the fixed column order squares,orbit_label,g,s,l,d,e,f."""
    return "%d,%s,%d,%d,%d,%d,%d,%d" % (
        squares if squares is not None else report.origami["n"],
        orbit_label,
        report.curve["genus"],
        report.curve["s"],
        report.cusps["level"],
        report.orbit["d"],
        report.deficiency["e"],
        report.deficiency["f"],
    )
