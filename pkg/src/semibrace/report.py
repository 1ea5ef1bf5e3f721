"""Assembly of the full analysis report for one structure.

The report is a plain dict of JSON-serializable values with element
labels instead of indices, deterministic across runs: subsets are
sorted by element index before labeling and serialization sorts keys.
"""

from __future__ import annotations

from .core import FiniteLeftSemibrace
from .series import analyze_series, classify, has_z_series
from .subsets import (
    annihilator,
    center_mul,
    e_ideal_report,
    generalized_socle,
    is_ideal_thm,
    is_left_ideal,
    socle,
    sumset,
)
from .constructions import sub_semibrace
from .ybe import check_braid, properties, restrict_to_E, solution_of


def _labels(B, xs):
    return [B.label(x) for x in sorted(xs)]


def _verdict_dict(B, v):
    out = {"is_left_ideal": v.is_left_ideal, "is_ideal": v.is_ideal}
    if v.failed_condition is not None:
        out["failed_condition"] = v.failed_condition
        out["witness"] = [B.label(x) for x in v.witness if isinstance(x, int)]
    return out


def series_section(B: FiniteLeftSemibrace, series=None) -> dict:
    series = series or analyze_series(B)
    out = {}
    for kind, rep in sorted(series.items()):
        out[kind] = {
            "terms": [_labels(B, t) for t in rep.terms],
            "stabilized_at": rep.stabilized_at,
            "terminal": _labels(B, rep.terminal),
        }
    return out


def analysis_report(B: FiniteLeftSemibrace) -> dict:
    warnings: list[str] = []
    e_rep = e_ideal_report(B)
    series = analyze_series(B)
    profile = classify(B, _series=series)
    z_flag, z_chain = has_z_series(B)

    G_sub, embed = sub_semibrace(B, B.G)
    soc_G = frozenset(embed[i] for i in socle(G_sub))

    r = solution_of(B)
    braid_ok, braid_witness = check_braid(r)
    if not braid_ok:
        warnings.append(f"braid relation fails at {braid_witness}")
    props = properties(r)
    s = restrict_to_E(B, r)
    s_flat = s.flat()
    s_idempotent = tuple(s_flat[v] for v in s_flat) == s_flat

    e_ideal_entry = {"is_ideal": e_rep.is_ideal}
    if e_rep.witness is not None:
        b, e, conj = e_rep.witness
        e_ideal_entry["witness"] = {
            "conjugator": B.label(b),
            "idempotent": B.label(e),
            "conjugate": B.label(conj),
        }

    report = {
        "order": B.n,
        "labels": [B.label(a) for a in B.elements()],
        "sizes": {"B": B.n, "G": len(B.G), "E": len(B.E)},
        "G": _labels(B, B.G),
        "E": _labels(B, B.E),
        "E_is_ideal": e_ideal_entry,
        "socles": {
            "soc": _labels(B, socle(B)),
            "soc_of_G": _labels(B, soc_G),
            "soc_of_G_plus_E": _labels(B, sumset(B, soc_G, B.E)),
            "zoc": _labels(B, generalized_socle(B)) if e_rep.is_ideal else None,
            "ann": _labels(B, annihilator(B)),
            "mul_center": _labels(B, center_mul(B)),
        },
        "profile": {
            "right_nilpotent": profile.right_nilpotent,
            "left_nilpotent": profile.left_nilpotent,
            "strongly_nilpotent": profile.strongly_nilpotent,
            "nilpotent": profile.nilpotent,
            "right_nil": profile.right_nil,
            "left_nil": profile.left_nil,
            "has_z_series": profile.has_z_series,
            "mul_group_nilpotent": profile.mul_group_nilpotent,
            "add_group_G_nilpotent": profile.add_group_G_nilpotent,
            "E_is_ideal": profile.E_is_ideal,
            "indices": dict(sorted(profile.indices.items())),
        },
        "z_series": [_labels(B, t) for t in z_chain] if z_chain else None,
        "series": series_section(B, series),
        "ybe": {
            "braid_ok": braid_ok,
            "bijective": props.bijective,
            "involutive": props.involutive,
            "idempotent": props.idempotent,
            "period": props.period,
            "s_idempotent": s_idempotent,
        },
        "warnings": warnings,
    }
    return report


def ideals_report(B: FiniteLeftSemibrace, cap: int = 10) -> dict:
    """Verdicts for the named subsets, plus the full ideal list when
    2^|B| stays below the cap's budget."""
    e_rep = e_ideal_report(B)
    named = {
        "E": B.E,
        "G": B.G,
        "Soc": socle(B),
        "Ann": annihilator(B),
    }
    if e_rep.is_ideal:
        named["Zoc"] = generalized_socle(B)
    out = {
        "named": {
            name: {
                "members": _labels(B, subset),
                **_verdict_dict(B, is_ideal_thm(B, subset)),
            }
            for name, subset in sorted(named.items())
        }
    }
    if B.n <= cap:
        ideals = []
        left_ideals = []
        for mask in range(1, 2 ** B.n):
            subset = frozenset(i for i in range(B.n) if mask >> i & 1)
            v = is_left_ideal(B, subset)
            if v.is_ideal:
                ideals.append(_labels(B, subset))
            elif v.is_left_ideal:
                left_ideals.append(_labels(B, subset))
        out["all_ideals"] = sorted(ideals, key=lambda s: (len(s), s))
        out["proper_left_ideals"] = sorted(left_ideals, key=lambda s: (len(s), s))
    else:
        out["all_ideals"] = None
    return out
