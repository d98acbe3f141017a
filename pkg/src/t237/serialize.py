"""JSON schema for inputs and reports.

Rationals are ``"p/q"`` strings or JSON integers, never floats.  Polynomials
are arrays of rationals indexed by degree.  Object layouts::

    configuration  {"curves": [{"name": ..., "selfint": ...}], "edges": [[i, j]]}
    Brieskorn      {"t4": ..., ..., "t42": ...}
    surface data   {"chi_O", "vol", "p_g", "mode",
                    "singularities": [{"chain": [...], "incidence": [...]}
                                      | {"chain": [...], "canonical": true}]}
    Weierstrass    {"a": [...], "b": [...], "N": ...}
"""

from __future__ import annotations

import json
import math
import re
from fractions import Fraction
from pathlib import Path
from typing import Any

from .exact_algebra import PowerSeries, UniPoly
from .intersection_calc import CurveConfig, QDivisor, t237_config, type_one_config
from .quotient_sing import HJChain, SingularityIncidence
from .riemann_roch import MODES, PlurigeneraTable, SurfaceRRData, min_volume_surface_data, boundary_pair_data
from .weierstrass import (
    BrieskornParams,
    FiberReport,
    JSpecial,
    KodairaType,
    Place,
    SurfaceReport,
    WeierstrassModel,
)


class SchemaError(ValueError):
    """Input that does not parse or validate; ``errors`` lists every problem."""

    def __init__(self, errors: list[str] | str):
        self.errors = [errors] if isinstance(errors, str) else list(errors)
        super().__init__("; ".join(self.errors))


_RATIONAL = re.compile(r"^\s*[+-]?\d+(\s*/\s*\d+)?\s*$")


class FloatLiteral(str):
    """A JSON number with a fraction or exponent, kept as text so it can be reported."""


def parse_rational(value: Any, where: str, errors: list[str]) -> Fraction | None:
    if isinstance(value, FloatLiteral):
        errors.append(f"{where}: floating-point literal {value} is not allowed; use 'p/q'")
        return None
    if isinstance(value, bool) or not isinstance(value, (int, str)):
        errors.append(f"{where}: expected an integer or a 'p/q' string, got {value!r}")
        return None
    if isinstance(value, str) and not _RATIONAL.match(value):
        errors.append(f"{where}: {value!r} is not of the form 'p/q'")
        return None
    try:
        return Fraction(value.replace(" ", "") if isinstance(value, str) else value)
    except ZeroDivisionError:
        errors.append(f"{where}: zero denominator")
        return None


def _int(value: Any, where: str, errors: list[str]) -> int | None:
    if isinstance(value, FloatLiteral):
        errors.append(f"{where}: expected an integer, got floating-point {value}")
        return None
    if isinstance(value, bool) or not isinstance(value, int):
        errors.append(f"{where}: expected an integer, got {value!r}")
        return None
    return value


def _int_list(value: Any, where: str, errors: list[str]) -> list[int] | None:
    if not isinstance(value, list):
        errors.append(f"{where}: expected a list of integers")
        return None
    out = [_int(x, f"{where}[{i}]", errors) for i, x in enumerate(value)]
    return None if any(x is None for x in out) else out


def _poly(value: Any, where: str, errors: list[str]) -> UniPoly | None:
    if not isinstance(value, list):
        errors.append(f"{where}: expected an array of rationals")
        return None
    cs = [parse_rational(x, f"{where}[{i}]", errors) for i, x in enumerate(value)]
    return None if any(c is None for c in cs) else UniPoly(cs)


# -- loading ------------------------------------------------------------------

def config_from_json(data: dict) -> CurveConfig:
    errors: list[str] = []
    curves = data.get("curves")
    if not isinstance(curves, list) or not curves:
        errors.append("curves: expected a nonempty list")
        curves = []
    names, selfints = [], []
    for i, c in enumerate(curves):
        if not isinstance(c, dict):
            errors.append(f"curves[{i}]: expected an object")
            continue
        if not isinstance(c.get("name"), str):
            errors.append(f"curves[{i}].name: expected a string")
        names.append(c.get("name"))
        selfints.append(_int(c.get("selfint"), f"curves[{i}].selfint", errors))
    edges = data.get("edges", [])
    pairs = []
    if not isinstance(edges, list):
        errors.append("edges: expected a list of [i, j] pairs")
        edges = []
    for k, e in enumerate(edges):
        if not (isinstance(e, list) and len(e) == 2):
            errors.append(f"edges[{k}]: expected [i, j]")
            continue
        i = _int(e[0], f"edges[{k}][0]", errors)
        j = _int(e[1], f"edges[{k}][1]", errors)
        if i is not None and j is not None:
            if not (0 <= i < len(curves) and 0 <= j < len(curves)) or i == j:
                errors.append(f"edges[{k}]: invalid curve indices {e}")
            else:
                pairs.append((i, j))
    if errors:
        raise SchemaError(errors)
    try:
        return CurveConfig.from_edges(names, selfints, pairs)
    except ValueError as exc:
        raise SchemaError(f"configuration: {exc}") from None


def surface_data_from_json(data: dict) -> SurfaceRRData:
    errors: list[str] = []
    chi = parse_rational(data.get("chi_O"), "chi_O", errors)
    vol = parse_rational(data.get("vol"), "vol", errors)
    p_g = _int(data.get("p_g"), "p_g", errors)
    mode = data.get("mode")
    if mode not in MODES:
        errors.append(f"mode: expected one of {list(MODES)}, got {mode!r}")
    sings = []
    raw = data.get("singularities", [])
    if not isinstance(raw, list):
        errors.append("singularities: expected a list")
        raw = []
    for i, s in enumerate(raw):
        where = f"singularities[{i}]"
        if not isinstance(s, dict):
            errors.append(f"{where}: expected an object")
            continue
        chain = _int_list(s.get("chain"), f"{where}.chain", errors)
        if chain is not None and (not chain or any(b < 2 for b in chain)):
            errors.append(f"{where}.chain: entries must be integers >= 2")
            chain = None
        if s.get("canonical") is True:
            if "incidence" in s:
                errors.append(f"{where}: give either incidence or canonical, not both")
            elif chain is not None:
                sings.append(HJChain(tuple(chain)))
        elif "incidence" in s:
            inc = _int_list(s.get("incidence"), f"{where}.incidence", errors)
            if inc is not None and chain is not None:
                if len(inc) != len(chain) or any(m < 0 for m in inc):
                    errors.append(f"{where}.incidence: need {len(chain)} nonnegative integers")
                else:
                    sings.append(SingularityIncidence(HJChain(tuple(chain)), tuple(inc)))
        else:
            errors.append(f"{where}: needs 'incidence' or 'canonical': true")
    if vol is not None and vol <= 0:
        errors.append("vol: must be positive")
    if errors:
        raise SchemaError(errors)
    try:
        return SurfaceRRData(chi, vol, p_g, mode, tuple(sings))
    except ValueError as exc:
        raise SchemaError(str(exc)) from None


def params_from_json(data: dict) -> BrieskornParams:
    errors: list[str] = []
    keys = set(BrieskornParams.keys())
    values = {}
    for k, v in data.items():
        if k not in keys:
            errors.append(f"{k}: unknown parameter (expected t4 ... t42)")
            continue
        values[k] = parse_rational(v, k, errors)
    if errors:
        raise SchemaError(errors)
    try:
        return BrieskornParams(**values)
    except ValueError as exc:
        raise SchemaError(str(exc)) from None


def model_from_json(data: dict) -> WeierstrassModel:
    errors: list[str] = []
    a = _poly(data.get("a"), "a", errors)
    b = _poly(data.get("b"), "b", errors)
    N = _int(data.get("N", 2), "N", errors)
    if errors:
        raise SchemaError(errors)
    try:
        return WeierstrassModel(a, b, N)
    except ValueError as exc:
        raise SchemaError(str(exc)) from None


def divisor_from_json(data: dict) -> QDivisor:
    errors: list[str] = []
    if not isinstance(data, dict):
        raise SchemaError("divisor: expected an object mapping curve names to rationals")
    out = {k: parse_rational(v, k, errors) for k, v in data.items()}
    if errors:
        raise SchemaError(errors)
    return QDivisor(out)


PRESETS = {
    "theorem-4.3": min_volume_surface_data,
    "theorem-4.4": boundary_pair_data,
    "t237": t237_config,
    "type-I-config": type_one_config,
}


def from_json(data: Any):
    if not isinstance(data, dict):
        raise SchemaError("top level: expected a JSON object")
    if "curves" in data:
        return config_from_json(data)
    if "chi_O" in data or "singularities" in data:
        return surface_data_from_json(data)
    if "a" in data or "b" in data:
        return model_from_json(data)
    if data and all(re.fullmatch(r"t\d+", k) for k in data):
        return params_from_json(data)
    raise SchemaError("top level: cannot tell which kind of object this is")


def read_json(path: str | Path) -> Any:
    text = Path(path).read_text(encoding="utf-8")
    try:
        return json.loads(text, parse_float=FloatLiteral)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{path}:{exc.lineno}:{exc.colno}: {exc.msg}") from None


def load_model(path_or_preset: str | Path):
    """Load a configuration, surface dataset, Brieskorn point or Weierstrass model."""
    key = str(path_or_preset)
    if key in PRESETS:
        return PRESETS[key]()
    if not Path(key).exists():
        raise SchemaError(f"{key}: no such file or preset (presets: {', '.join(PRESETS)})")
    return from_json(read_json(key))


# -- dumping ------------------------------------------------------------------

def rat(x) -> str:
    return str(Fraction(x))


def to_json(obj: Any) -> Any:
    """Convert domain objects to JSON-compatible values with exact rationals."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, int):
        return obj
    if isinstance(obj, float):
        if math.isinf(obj):
            return "inf" if obj > 0 else "-inf"
        raise TypeError("floating-point value in report")
    if isinstance(obj, Fraction):
        return rat(obj)
    if isinstance(obj, UniPoly):
        return [rat(c) for c in obj.coeffs]
    if isinstance(obj, PowerSeries):
        return [rat(c) for c in obj.coeffs]
    if isinstance(obj, JSpecial):
        return obj.value
    if isinstance(obj, KodairaType):
        return str(obj)
    if isinstance(obj, Place):
        return "infinity" if obj.is_infinity else to_json(obj.poly)
    if isinstance(obj, FiberReport):
        return {
            "place": to_json(obj.place),
            "residual_degree": obj.residual_degree,
            "ord_A": to_json(obj.ord_a),
            "ord_B": to_json(obj.ord_b),
            "ord_Delta": to_json(obj.ord_delta),
            "type": to_json(obj.kodaira),
            "j": to_json(obj.j),
        }
    if isinstance(obj, SurfaceReport):
        out = {
            "surface_type": obj.surface_type,
            "k3_fibers": [to_json(r) for r in obj.k3_fibers],
            "k3_euler": obj.k3_euler,
        }
        if obj.special_place is not None:
            out["special_place"] = to_json(obj.special_place)
            out["minimal_fibers"] = [to_json(r) for r in obj.minimal_fibers]
            out["minimal_euler"] = obj.minimal_euler
            out["j"] = to_json(obj.j)
        return out
    if isinstance(obj, CurveConfig):
        return {
            "curves": [{"name": n, "selfint": s} for n, s in zip(obj.names, obj.selfint)],
            "edges": [list(e) for e in obj.edges()],
        }
    if isinstance(obj, QDivisor):
        return {k: rat(v) for k, v in obj.coefficients.items()}
    if isinstance(obj, HJChain):
        return list(obj.selfints)
    if isinstance(obj, SurfaceRRData):
        sings = []
        for s in obj.singularities:
            if isinstance(s, HJChain):
                sings.append({"chain": list(s.selfints), "canonical": True})
            else:
                sings.append({"chain": list(s.chain.selfints), "incidence": list(s.strict_mult)})
        return {"chi_O": rat(obj.chi_O), "vol": rat(obj.vol), "p_g": obj.p_g, "mode": obj.mode, "singularities": sings}
    if isinstance(obj, BrieskornParams):
        return {k: rat(v) for k, v in obj.as_dict().items()}
    if isinstance(obj, WeierstrassModel):
        return {"a": to_json(obj.a), "b": to_json(obj.b), "N": obj.N}
    if isinstance(obj, PlurigeneraTable):
        return list(obj.values)
    if isinstance(obj, dict):
        return {str(k): to_json(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_json(v) for v in obj]
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def dumps(obj: Any) -> str:
    return json.dumps(to_json(obj), sort_keys=True, indent=2)
