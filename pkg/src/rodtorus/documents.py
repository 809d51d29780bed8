"""JSON packing and verdict documents.  Rationals travel as "p/q" strings."""
import json
import re
from fractions import Fraction

from . import __version__
from .classify import GeometryVerdict, PlaneTorusWitness, SweptAnnulusWitness
from .isotopy import (Candidate, CellCertificate, Isotopic, NotIsotopic, Strip,
                      Undecided)
from .rods import RodPacking, make_rod

TOOL = "rodtorus"
_RAT = re.compile(r"^[+-]?\d+(/\d+)?$")


class DocumentError(ValueError):
    """Malformed input document; message names the offending field."""


def parse_rat(s, where):
    if isinstance(s, bool) or isinstance(s, float):
        raise DocumentError(f"{where}: {s!r} is not exact; write rationals as \"p/q\"")
    if isinstance(s, int):
        return Fraction(s)
    if not isinstance(s, str) or not _RAT.match(s.strip()):
        raise DocumentError(f"{where}: {s!r} is not an exact rational (\"p/q\" or integer)")
    num, _, den = s.strip().partition("/")
    if den and int(den) == 0:
        raise DocumentError(f"{where}: zero denominator")
    return Fraction(int(num), int(den) if den else 1)


def fmt_rat(x):
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _int(x, where):
    if isinstance(x, bool) or not isinstance(x, int):
        raise DocumentError(f"{where}: expected an integer, got {x!r}")
    return x


def _check_keys(obj, allowed, where):
    if not isinstance(obj, dict):
        raise DocumentError(f"{where}: expected an object")
    extra = set(obj) - set(allowed)
    if extra:
        raise DocumentError(f"{where}: unknown field(s) {sorted(extra)}")


def loads_json(text, source="<input>"):
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise DocumentError(f"{source}: line {e.lineno} column {e.colno}: {e.msg}") from None


def packing_from_dict(doc):
    _check_keys(doc, {"name", "rods"}, "document")
    if "rods" not in doc or not isinstance(doc["rods"], list):
        raise DocumentError("document.rods: required list is missing")
    name = doc.get("name")
    if name is not None and not isinstance(name, str):
        raise DocumentError("document.name: expected a string")
    rods = []
    for idx, r in enumerate(doc["rods"]):
        where = f"rods[{idx}]"
        _check_keys(r, {"direction", "basepoint"}, where)
        for key in ("direction", "basepoint"):
            if not isinstance(r.get(key), list) or len(r[key]) != 3:
                raise DocumentError(f"{where}.{key}: expected a list of 3 entries")
        d = [_int(x, f"{where}.direction[{k}]") for k, x in enumerate(r["direction"])]
        b = [parse_rat(x, f"{where}.basepoint[{k}]") for k, x in enumerate(r["basepoint"])]
        rods.append(make_rod(d, b))
    return RodPacking(tuple(rods), name)


def packing_to_dict(p):
    out = {}
    if p.name is not None:
        out["name"] = p.name
    out["rods"] = [{"direction": list(r.direction),
                    "basepoint": [fmt_rat(x) for x in r.basepoint]} for r in p.rods]
    return out


def _vec(v):
    return [fmt_rat(x) for x in v]


def certificate_to_dict(c):
    return {
        "pair": list(c.pair),
        "direction": list(c.direction),
        "basis_change": [list(r) for r in c.basis_change],
        "source": _vec(c.source),
        "target_base": _vec(c.target_base),
        "strips": [{"m": list(s.m), "c": fmt_rat(s.c), "k": s.k} for s in c.strips],
        "candidates": [{"target": _vec(x.target),
                        "blocker": None if x.blocker is None else _vec(x.blocker)}
                       for x in c.candidates],
        "bounded": c.bounded,
        "vertices": [_vec(v) for v in c.vertices],
    }


def _rvec(v, where):
    return tuple(parse_rat(x, where) for x in v)


def certificate_from_dict(d):
    return CellCertificate(
        pair=tuple(d["pair"]),
        direction=tuple(d["direction"]),
        basis_change=tuple(tuple(r) for r in d["basis_change"]),
        source=_rvec(d["source"], "source"),
        target_base=_rvec(d["target_base"], "target_base"),
        strips=tuple(Strip(tuple(s["m"]), parse_rat(s["c"], "strip.c"), s["k"])
                     for s in d["strips"]),
        candidates=tuple(Candidate(_rvec(x["target"], "target"),
                                   None if x["blocker"] is None
                                   else _rvec(x["blocker"], "blocker"))
                         for x in d["candidates"]),
        bounded=bool(d["bounded"]),
        vertices=tuple(_rvec(v, "vertex") for v in d["vertices"]),
    )


def witness_to_dict(w):
    if isinstance(w, PlaneTorusWitness):
        return {"kind": "plane_torus", "normal": list(w.normal), "offset": fmt_rat(w.offset)}
    if isinstance(w, SweptAnnulusWitness):
        return {"kind": "swept_annulus", "pair": list(w.pair), "v": _vec(w.v)}
    return None


def witness_from_dict(d):
    if d is None:
        return None
    if d["kind"] == "plane_torus":
        return PlaneTorusWitness(tuple(d["normal"]), parse_rat(d["offset"], "offset"))
    if d["kind"] == "swept_annulus":
        return SweptAnnulusWitness(tuple(d["pair"]), _rvec(d["v"], "v"))
    raise DocumentError(f"unknown witness kind {d['kind']!r}")


def verdict_to_dict(gv, packing):
    return {
        "tool": TOOL,
        "version": __version__,
        "input": packing_to_dict(packing),
        "flags": {"hyperbolic": gv.hyperbolic, "seifert_fibred": gv.seifert_fibred},
        "direction_rank": gv.direction_rank,
        "independence_triple": None if gv.independence_triple is None
        else list(gv.independence_triple),
        "witness": witness_to_dict(gv.toroidal_witness),
        "certificates": [certificate_to_dict(c) for _, c in
                         sorted(gv.non_isotopy_certificates.items())],
    }


def verdict_from_dict(d):
    """Returns (packing, GeometryVerdict)."""
    packing = packing_from_dict(d["input"])
    certs = {}
    for c in d["certificates"]:
        cert = certificate_from_dict(c)
        certs[tuple(cert.pair)] = cert
    triple = d["independence_triple"]
    gv = GeometryVerdict(
        hyperbolic=bool(d["flags"]["hyperbolic"]),
        seifert_fibred=bool(d["flags"]["seifert_fibred"]),
        direction_rank=d["direction_rank"],
        toroidal_witness=witness_from_dict(d["witness"]),
        independence_triple=None if triple is None else tuple(triple),
        non_isotopy_certificates=certs,
    )
    return packing, gv


def isotopy_to_dict(verdict, pair):
    out = {"tool": TOOL, "version": __version__, "pair": list(pair)}
    if isinstance(verdict, Isotopic):
        out.update(result="Isotopic", v=_vec(verdict.v))
    elif isinstance(verdict, NotIsotopic):
        out.update(result="NotIsotopic", certificate=certificate_to_dict(verdict.certificate))
    elif isinstance(verdict, Undecided):
        out.update(result="Undecided", search_radius=verdict.search_radius)
    else:
        out.update(result="NotFoundWithin", search_radius=verdict.radius)
    return out


def dumps(obj):
    return json.dumps(obj, indent=2) + "\n"
