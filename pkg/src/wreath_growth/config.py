"""TOML run configurations: loading, schema validation and instance building.

A config is parsed with ``tomllib`` (``tomli`` before Python 3.11), validated
against a JSON Schema that rejects unknown keys, and only then turned into
algebra, sequence and descriptor objects.  Every failure surfaces as
:class:`ConfigError`; TOML syntax errors carry the line and column.
"""

from __future__ import annotations

import hashlib
import json
import re
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

import jsonschema

from . import asymptotics as asy
from .algebra import (Algebra, MonomialQuotientAlgebra, PolynomialAlgebra,
                      StructureConstantAlgebra)
from .errors import ConfigError, WreathGrowthError
from .fields import Field
from .semigroup import SemigroupSpec
from .sequence import GeneratingSequence

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

_INT1 = {"type": "integer", "minimum": 1}
_NAT = {"type": "integer", "minimum": 0}
_SCALAR = {"oneOf": [{"type": "integer"}, {"type": "string", "pattern": r"^-?\d+(/\d+)?$"}]}
_NAMES = {"type": "array", "items": {"type": "string", "minLength": 1}}


def _obj(props: dict, required=()) -> dict:
    return {"type": "object", "properties": props, "required": list(required),
            "additionalProperties": False}


_DESCRIPTOR = _obj({
    "family": {"enum": sorted(asy.FAMILIES)},
    "d": _SCALAR, "beta": _SCALAR, "alpha": _SCALAR, "value": _SCALAR, "plus": _SCALAR,
}, ["family"])

_POSITIONS = _obj({
    "family": {"enum": ["power", "triangular", "geometric", "list"]},
    "exponent": _INT1, "base": {"type": "integer", "minimum": 2},
    "values": {"type": "array", "items": _INT1},
}, ["family"])

_ELEMENTS = _obj({
    "family": {"enum": ["constant", "power_of", "cycle"]},
    "value": {"type": "string"}, "base": {"type": "string"}, "values": _NAMES,
}, ["family"])

_SEQUENCE = _obj({
    "entries": {"type": "object", "patternProperties": {r"^[1-9]\d*$": {"type": "string"}},
                "additionalProperties": False},
    "positions": _POSITIONS,
    "elements": _ELEMENTS,
    "horizon": _INT1,
    "gap_mode": {"type": "boolean"},
})

SCHEMA = _obj({
    "run": _obj({"seed": {"type": "integer"}, "mode": {"enum": ["formal", "exact"]},
                 "threads": _INT1}),
    "field": _obj({"kind": {"enum": ["gf", "rationals"]}, "modulus": {"type": "integer"}},
                  ["kind"]),
    "algebra": _obj({
        "kind": {"enum": ["polynomial", "monomial_quotient", "structure_constants"]},
        "variables": _NAMES, "alphabet": _NAMES, "forbidden": _NAMES, "cap": _INT1,
        "table": {"type": "array", "items": {"type": "array", "items": {"type": "string"}}},
        "names": _NAMES, "unit": {"type": "string"},
    }, ["kind"]),
    "flags": _obj({"is_domain": {"type": "boolean"}, "is_unital": {"type": "boolean"}}),
    "sequence": _SEQUENCE,
    "growth": _obj({"horizon": _INT1, "w_horizon": _INT1, "symbolic_tails": {"type": "boolean"},
                    "unit_position": {"enum": [0, 1]}}),
    "verify": _obj({"samples": _INT1, "degree": _INT1, "filtration_n": _NAT, "shape_n": _NAT,
                    "corollary1_n": _NAT, "assoc_triples": _NAT, "oracle_pairs": _NAT,
                    "algebra_samples": _NAT, "oracle_radius": _INT1}),
    "dilute": _obj({"generators": _NAMES, "c": {"type": "array", "items": _INT1},
                    "eps": {"type": "array", "items": _SCALAR}, "f": _DESCRIPTOR,
                    "h": _DESCRIPTOR,
                    "merge": {"type": "array", "items": _DESCRIPTOR},
                    "horizon": _INT1, "fit_horizon": _INT1, "fit_cap": _INT1}),
    "semigroup": _obj({"kind": {"enum": ["free_monogenic", "table", "free_monoid"]},
                       "table": {"type": "array",
                                 "items": {"type": "array", "items": _NAT}},
                       "alphabet": _NAMES, "cap": _INT1, "unit": {"type": "boolean"},
                       "horizon": _INT1, "generator_variant": {"enum": ["e00", "e11"]},
                       "samples": _INT1, "degree": _INT1, "sequence": _SEQUENCE},
                      ["kind"]),
    "report": _obj({"horizon": _INT1, "window": {"type": "array", "items": _INT1,
                                                 "minItems": 2, "maxItems": 2},
                    "alphas": {"type": "array", "items": _SCALAR},
                    "corollary1_n": _NAT}),
})

_TOML_POS = re.compile(r"\(at line (\d+), column (\d+)\)")


@dataclass
class RunConfig:
    """A validated configuration plus the overrides given on the command line."""

    data: dict
    source: str = "<memory>"

    # ----------------------------------------------------------------- loading
    @classmethod
    def from_text(cls, text: str, source: str = "<memory>") -> "RunConfig":
        try:
            data = tomllib.loads(text)
        except tomllib.TOMLDecodeError as exc:
            m = _TOML_POS.search(str(exc))
            msg = _TOML_POS.sub("", str(exc)).strip()
            raise ConfigError(f"TOML syntax error: {msg}",
                              *(map(int, m.groups()) if m else (None, None))) from None
        return cls.from_dict(data, source)

    @classmethod
    def from_path(cls, path) -> "RunConfig":
        p = Path(path)
        try:
            text = p.read_text(encoding="utf-8")
        except OSError as exc:
            raise ConfigError(f"cannot read config {path}: {exc.strerror}") from None
        return cls.from_text(text, str(p))

    @classmethod
    def from_dict(cls, data: dict, source: str = "<memory>") -> "RunConfig":
        validate(data)
        return cls(data, source)

    def with_overrides(self, *, seed=None, mode=None, horizon=None, section=None) -> "RunConfig":
        data = json.loads(json.dumps(self.data))
        run = data.setdefault("run", {})
        if seed is not None:
            run["seed"] = seed
        if mode is not None:
            run["mode"] = mode
        if horizon is not None and section is not None:
            data.setdefault(section, {})["horizon"] = horizon
        return RunConfig.from_dict(data, self.source)

    # ---------------------------------------------------------------- accessors
    def section(self, name: str) -> dict:
        return self.data.get(name, {})

    @property
    def seed(self) -> int:
        return self.section("run").get("seed", 0)

    @property
    def mode(self) -> str:
        return self.section("run").get("mode", "exact")

    @property
    def threads(self) -> int | None:
        return self.section("run").get("threads")

    def digest(self) -> str:
        """sha256 of the canonical JSON form of the effective config."""
        blob = json.dumps(self.data, sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(blob.encode()).hexdigest()

    # ---------------------------------------------------------------- builders
    def field(self) -> Field:
        spec = self.section("field") or {"kind": "gf", "modulus": 2}
        if spec["kind"] == "rationals":
            if "modulus" in spec:
                raise ConfigError("field.modulus is only valid with kind = 'gf'")
            return Field.rationals()
        if "modulus" not in spec:
            raise ConfigError("field.modulus is required for kind = 'gf'")
        return _wrap(Field.gf, spec["modulus"])

    def algebra(self) -> Algebra:
        spec = self.section("algebra")
        if not spec:
            raise ConfigError("missing [algebra] section")
        F = self.field()
        flags = self.section("flags")
        kind = spec["kind"]
        _only(spec, kind, {"polynomial": {"variables"},
                           "monomial_quotient": {"alphabet", "forbidden", "cap"},
                           "structure_constants": {"table", "names", "unit"}})
        if kind == "polynomial":
            if flags.get("is_domain") is False or flags.get("is_unital") is False:
                raise ConfigError("polynomial algebras are unital domains")
            return _wrap(PolynomialAlgebra, F, spec.get("variables", ["x"]))
        if kind == "monomial_quotient":
            if "alphabet" not in spec:
                raise ConfigError("algebra.alphabet is required for monomial_quotient")
            return _wrap(MonomialQuotientAlgebra, F, spec["alphabet"],
                         spec.get("forbidden", []), cap=spec.get("cap"),
                         assume_domain=flags.get("is_domain", False))
        if flags.get("is_domain"):
            raise ConfigError("is_domain cannot be asserted for a structure-constant table")
        table = spec.get("table")
        if not table:
            raise ConfigError("algebra.table is required for structure_constants")
        names = spec.get("names") or [f"e{i}" for i in range(len(table))]
        if len(names) != len(table):
            raise ConfigError("algebra.names must have one name per basis element")
        index = {n: i for i, n in enumerate(names)}
        rows = [[_linear_combination(e, index) for e in row] for row in table]
        unit = spec.get("unit")
        if unit is not None and unit not in index:
            raise ConfigError(f"algebra.unit {unit!r} is not a basis name")
        return _wrap(StructureConstantAlgebra, F, rows,
                     unit=None if unit is None else index[unit],
                     is_unital=flags.get("is_unital"), names=names, passthrough=True)

    def sequence(self, alg: Algebra, spec: dict | None = None) -> GeneratingSequence:
        spec = self.section("sequence") if spec is None else spec
        return build_sequence(alg, spec)

    def semigroup(self) -> SemigroupSpec:
        spec = self.section("semigroup")
        if not spec:
            raise ConfigError("missing [semigroup] section")
        kind = spec["kind"]
        if kind == "free_monoid" and "cap" not in spec:
            raise ConfigError("semigroup kind 'free_monoid' requires a length cap")
        if kind == "table" and "table" not in spec:
            raise ConfigError("semigroup kind 'table' requires a Cayley table")
        return _wrap(SemigroupSpec, kind, table=spec.get("table"), alphabet=spec.get("alphabet"),
                     cap=spec.get("cap"), unit=spec.get("unit", True), passthrough=True)


def validate(data: dict) -> None:
    """Raise ConfigError naming the first schema violation, if any."""
    validator = jsonschema.Draft202012Validator(SCHEMA)
    errors = sorted(validator.iter_errors(data), key=lambda e: list(map(str, e.path)))
    if errors:
        err = errors[0]
        where = ".".join(str(p) for p in err.path) or "<root>"
        if err.validator == "additionalProperties":
            extra = sorted(set(err.instance) - set(err.schema.get("properties", {})))
            raise ConfigError(f"unknown key(s) {extra} in {where}")
        raise ConfigError(f"invalid value at {where}: {err.message}")


def descriptor(spec: dict) -> asy.FunctionDescriptor:
    spec = dict(spec)
    family = spec.pop("family")
    try:
        return asy.FAMILIES[family](**spec)
    except TypeError as exc:
        raise ConfigError(f"bad parameters for family {family!r}: {exc}") from None
    except WreathGrowthError as exc:
        raise ConfigError(str(exc)) from None


def build_sequence(alg: Algebra, spec: dict) -> GeneratingSequence:
    if not spec:
        raise ConfigError("missing sequence definition")
    has_entries = "entries" in spec
    has_rule = "positions" in spec or "elements" in spec
    if has_entries == has_rule:
        raise ConfigError("a sequence needs either 'entries' or 'positions' + 'elements'")
    if has_entries:
        if "horizon" in spec or spec.get("gap_mode"):
            raise ConfigError("'horizon' and 'gap_mode' apply to rule sequences only")
        entries = {int(k): parse_element(alg, v) for k, v in spec["entries"].items()}
        return _wrap(GeneratingSequence, alg, entries)
    if "positions" not in spec or "elements" not in spec or "horizon" not in spec:
        raise ConfigError("rule sequences need 'positions', 'elements' and 'horizon'")
    pos, el = spec["positions"], spec["elements"]
    positions = _position_rule(pos)
    elements = _element_rule(alg, el)
    return _wrap(GeneratingSequence, alg, positions=positions, elements=elements,
                 horizon=spec["horizon"], gap_mode=spec.get("gap_mode", False),
                 description={"positions": pos, "elements": el})


def _position_rule(pos: dict):
    fam = pos["family"]
    if fam == "power":
        e = pos.get("exponent", 2)
        return lambda k: k ** e
    if fam == "triangular":
        return lambda k: k * (k + 1) // 2
    if fam == "geometric":
        b = pos.get("base", 2)
        return lambda k: b ** (k - 1)
    values = pos.get("values")
    if not values:
        raise ConfigError("positions family 'list' needs 'values'")
    return lambda k: values[k - 1] if k <= len(values) else sys.maxsize


def _element_rule(alg: Algebra, el: dict):
    fam = el["family"]
    if fam == "constant":
        b = parse_element(alg, _need(el, "value"))
        return lambda k: b
    if fam == "power_of":
        b = parse_element(alg, _need(el, "base"))
        return lambda k: b ** k
    vals = [parse_element(alg, v) for v in _need(el, "values")]
    if not vals:
        raise ConfigError("elements family 'cycle' needs at least one value")
    return lambda k: vals[(k - 1) % len(vals)]


def _need(d: dict, key: str):
    if key not in d:
        raise ConfigError(f"missing key {key!r} for family {d.get('family')!r}")
    return d[key]


def _only(spec: dict, kind: str, allowed: dict) -> None:
    extra = sorted(set(spec) - {"kind"} - allowed[kind])
    if extra:
        raise ConfigError(f"key(s) {extra} do not apply to algebra kind {kind!r}")


def parse_element(alg: Algebra, text: str):
    return _wrap(alg.parse, text)


def _wrap(fn, *args, passthrough: bool = False, **kw):
    """Call ``fn`` turning library errors into ConfigError.

    With ``passthrough`` an AssociativityError keeps its own type (it is a
    check failure, not a syntax problem).
    """
    from .errors import AssociativityError
    try:
        return fn(*args, **kw)
    except AssociativityError:
        if passthrough:
            raise
        raise ConfigError("multiplication table is not associative") from None
    except WreathGrowthError as exc:
        if isinstance(exc, ConfigError):
            raise
        raise ConfigError(str(exc)) from None
    except (ValueError, TypeError) as exc:
        raise ConfigError(str(exc)) from None


_LC_TERM = re.compile(r"\s*([+-])?\s*(?:(\d+(?:/\d+)?)\s*\*?\s*)?([A-Za-z_][A-Za-z_0-9]*)?\s*")


def _linear_combination(text: str, index: dict) -> dict:
    """Parse ``"e0 + 2*e1 - 1/2 e2"`` (or ``"0"``) into ``{label: coeff}``."""
    out: dict[int, Fraction] = {}
    s = text.strip()
    if s == "0":
        return out
    pos = 0
    first = True
    while pos < len(s):
        m = _LC_TERM.match(s, pos)
        sign, coef, name = m.groups()
        if m.end() == pos or name is None or (sign is None and not first):
            raise ConfigError(f"cannot parse table entry {text!r}")
        if name not in index:
            raise ConfigError(f"unknown basis name {name!r} in table entry {text!r}")
        c = Fraction(coef) if coef else Fraction(1)
        if sign == "-":
            c = -c
        lab = index[name]
        out[lab] = out.get(lab, 0) + c
        pos = m.end()
        first = False
    return out
