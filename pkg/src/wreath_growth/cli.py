"""Command line driver: ``wreath-growth {growth,verify,dilute,semigroup,report}``.

Each command reads one TOML config, writes its outputs into ``--out`` and exits
with 0 (pass), 1 (a check failed), 2 (config or mode error) or 3 (horizon or
resource limit).  Outputs carry a header with the config digest, seed, mode
and tool version and contain no timestamps, so reruns are byte-identical.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile
from pathlib import Path

from . import __version__
from . import asymptotics as asy
from .checks import check_algebra_laws, check_oracle_equivalence, check_wreath_associativity
from .config import RunConfig, build_sequence, descriptor, parse_element
from .errors import AssociativityError, ConfigError, PreconditionError, WreathGrowthError
from .growth import (GrowthSeries, check_filtration_in_power, check_power_shape,
                     run_growth, w_series)
from .semigroup import semigroup_growth, verify_left_ideal_semigroup
from .wreath import WreathProduct, verify_left_ideal, verify_two_sided_banded

VERBS = ("growth", "verify", "dilute", "semigroup", "report")

# the config section whose "horizon" the --horizon flag overrides
_HORIZON_SECTION = {"growth": "growth", "verify": "growth", "dilute": "dilute",
                    "semigroup": "semigroup", "report": "report"}


class Output:
    """Collects output files and writes them atomically."""

    def __init__(self, out_dir: Path, cfg: RunConfig, command: str):
        self.dir = out_dir
        self.meta = {"command": command, "config_digest": cfg.digest(), "seed": cfg.seed,
                     "mode": cfg.mode, "tool_version": __version__}

    def json(self, name: str, payload: dict) -> None:
        body = {"meta": self.meta}
        body.update(payload)
        self._write(name, json.dumps(body, sort_keys=True, indent=2) + "\n")

    def csv(self, name: str, series: GrowthSeries) -> None:
        head = "".join(f"# {k}={self.meta[k]}\n" for k in sorted(self.meta))
        self._write(name, head + series.to_csv())

    def _write(self, name: str, text: str) -> None:
        atomic_write(self.dir / name, text)


def atomic_write(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


# ---------------------------------------------------------------------------
# commands; each returns the exit code

def cmd_growth(cfg: RunConfig, out: Output) -> int:
    """Growth series g and w as CSV plus JSON."""
    alg = cfg.algebra()
    seq = cfg.sequence(alg)
    g_spec = cfg.section("growth")
    H = g_spec.get("horizon", 10)
    run = run_growth(seq, alg, H, cfg.mode, symbolic_tails=g_spec.get("symbolic_tails", False),
                     unit_position=g_spec.get("unit_position", 0), threads=cfg.threads)
    g = run.series()
    w = w_series(seq, alg, g_spec.get("w_horizon", max(1, (H - 1) // 2)))
    w.meta["mode"] = cfg.mode
    out.csv("g.csv", g)
    out.csv("w.csv", w)
    out.json("growth.json", {"algebra": alg.describe(), "sequence": seq.to_json(),
                             "g": g.to_json(), "w": w.to_json()})
    return 0


def cmd_verify(cfg: RunConfig, out: Output) -> int:
    """Run the ideal, associativity, oracle and filtration checks."""
    v = cfg.section("verify")
    g_spec = cfg.section("growth")
    seed = cfg.seed
    checks: list[dict] = []
    try:
        alg = cfg.algebra()
    except AssociativityError as exc:
        checks.append({"name": "structure_constants_associativity", "passed": False,
                       "checked": 1, "witnesses": [{"triple": list(exc.triple),
                                                    "names": _basis_names(cfg, exc.triple)}]})
        out.json("verify.json", {"passed": False, "checks": checks})
        return 1
    if alg.kind == "structure_constants":
        checks.append({"name": "structure_constants_associativity", "passed": True,
                       "checked": alg.dimension ** 3, "witnesses": []})
    seq = cfg.sequence(alg)
    unit_position = g_spec.get("unit_position", 0)
    ctx = WreathProduct(alg, seq, unit_position=unit_position)
    if cfg.mode == "exact":
        ctx.require_exact()
    samples, degree = v.get("samples", 200), v.get("degree", 6)

    checks.append(check_algebra_laws(alg, v.get("algebra_samples", 200), seed).to_json())
    checks.append(verify_left_ideal(ctx, samples, degree, seed).to_json())
    try:
        checks.append(verify_two_sided_banded(ctx, samples, degree, seed).to_json())
    except PreconditionError as exc:
        checks.append({"name": "two_sided_ideal", "passed": True, "checked": 0,
                       "witnesses": [], "skipped": str(exc)})
    checks.append(check_wreath_associativity(ctx, v.get("assoc_triples", 200), seed).to_json())
    checks.append(check_oracle_equivalence(ctx, v.get("oracle_pairs", 100), seed,
                                           v.get("oracle_radius", 12)).to_json())

    n1 = v.get("filtration_n", 4)
    if n1:
        run = run_growth(seq, alg, 2 * n1 + 1, cfg.mode, unit_position=unit_position,
                         threads=cfg.threads)
        checks.append(check_filtration_in_power(run, n1).to_json())
    n2 = v.get("shape_n", 6)
    if n2:
        run = run_growth(seq, alg, n2, cfg.mode, symbolic_tails=True,
                         unit_position=unit_position, threads=cfg.threads)
        checks.append(check_power_shape(run, n2).to_json())
    n3 = v.get("corollary1_n", 6)
    if n3:
        run = run_growth(seq, alg, 2 * n3 + 1, cfg.mode, unit_position=unit_position,
                         threads=cfg.threads)
        checks.append(asy.corollary1_check(w_series(seq, alg, n3), run.series()).to_json())
    passed = all(c["passed"] for c in checks)
    out.json("verify.json", {"passed": passed, "checks": checks})
    return 0 if passed else 1


def _basis_names(cfg: RunConfig, triple) -> list[str]:
    names = cfg.section("algebra").get("names")
    return [names[i] if names else f"e{i}" for i in triple]


def cmd_dilute(cfg: RunConfig, out: Output) -> int:
    """Plan a diluted generating sequence."""
    d = cfg.section("dilute")
    alg = cfg.algebra()
    gens = [parse_element(alg, s) for s in d.get("generators", [])]
    H = d.get("horizon", 200)
    report: dict = {}
    f = descriptor(d["f"]) if "f" in d else None
    if "merge" in d:
        merged = asy.merge_subexponential([descriptor(s) for s in d["merge"]], H)
        report["merge"] = merged.to_json()
        f = merged.f
    c_list = d.get("c")
    eps = d.get("eps")
    if c_list is None:
        if not gens:
            c_list = []
        else:
            if f is None or eps is None:
                raise ConfigError("dilute needs either 'c' or both 'f' and 'eps' to fit constants")
            fits = asy.fit_eq1(alg, gens, f, d.get("fit_horizon", 10), eps,
                               d.get("fit_cap", 1024))
            report["fit"] = [r.to_json() for r in fits]
            if any(r.c is None for r in fits):
                out.json("dilution_plan.json", {"passed": False, "failure": "fit", **report})
                return 1
            c_list = [r.c for r in fits]
    if "h" in d:
        h = descriptor(d["h"])
    elif f is not None:
        plan = asy.superlinearize(f, H)
        report["superlinearize"] = plan.to_json()
        h = plan.h
    else:
        h = asy.theorem3_h()
    plan = asy.build_dilution(gens, c_list, eps, f, h, alg, H)
    out.json("sequence.json", {"sequence": plan.sequence.to_json()})
    out.json("dilution_plan.json", {"passed": True, "plan": plan.to_json(), **report})
    return 0


def cmd_semigroup(cfg: RunConfig, out: Output) -> int:
    """Count elements of the semigroup analog."""
    s = cfg.section("semigroup")
    P = cfg.semigroup()
    seq_spec = s.get("sequence")
    if seq_spec is None:
        raise ConfigError("semigroup.sequence is required")
    seq = build_sequence(P.algebra, seq_spec)
    unit_position = 1 if s.get("generator_variant", "e00") == "e11" else 0
    res = semigroup_growth(P, seq, s.get("horizon", 8), unit_position=unit_position)
    ideal = verify_left_ideal_semigroup(P, seq, s.get("samples", 200), s.get("degree", 6),
                                        cfg.seed, unit_position=unit_position)
    res.series.meta["mode"] = cfg.mode
    out.csv("semigroup.csv", res.series)
    passed = ideal.passed and not res.non_monomial
    out.json("semigroup.json", {"passed": passed, "growth": res.to_json(),
                                "left_ideal": ideal.to_json()})
    return 0 if passed else 1


def cmd_report(cfg: RunConfig, out: Output) -> int:
    """Slope, subexponential probe and growth bounds for a run."""
    r = cfg.section("report")
    alg = cfg.algebra()
    seq = cfg.sequence(alg)
    unit_position = cfg.section("growth").get("unit_position", 0)
    H = r.get("horizon", 20)
    window = tuple(r.get("window", [max(2, H // 2), H]))
    run = run_growth(seq, alg, H, cfg.mode, unit_position=unit_position, threads=cfg.threads)
    g = run.series()
    payload: dict = {"g": g.to_json(),
                     "gk_slope": asy.gk_slope(g, window).to_json(),
                     "subexp_probe": [p.to_json() for p in
                                      asy.subexp_probe(g, r.get("alphas", ["1/10", "1/100"]))]}
    passed = True
    n_c = r.get("corollary1_n", (H - 1) // 2)
    if n_c:
        rep = asy.corollary1_check(w_series(seq, alg, n_c), g)
        payload["corollary1"] = rep.to_json()
        passed = rep.passed
    out.csv("g.csv", g)
    out.json("report.json", {"passed": passed, **payload})
    return 0 if passed else 1


COMMANDS = {"growth": cmd_growth, "verify": cmd_verify, "dilute": cmd_dilute,
            "semigroup": cmd_semigroup, "report": cmd_report}


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="wreath-growth",
                                     description="Growth experiments for matrix wreath products.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="verb", required=True)
    for verb in VERBS:
        p = sub.add_parser(verb, help=(COMMANDS[verb].__doc__ or verb))
        p.add_argument("--config", required=True, metavar="PATH")
        p.add_argument("--out", required=True, metavar="DIR")
        p.add_argument("--seed", type=int)
        p.add_argument("--mode", choices=("formal", "exact"))
        p.add_argument("--horizon", type=int)
    return parser


def _error(exc: Exception, code: int) -> dict:
    body = {"error": type(exc).__name__, "message": str(exc), "exit_code": code}
    for attr in ("line", "column"):
        if getattr(exc, attr, None) is not None:
            body[attr] = getattr(exc, attr)
    if isinstance(exc, AssociativityError):
        body["triple"] = list(exc.triple)
    return body


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    out_dir = Path(args.out)
    try:
        if args.horizon is not None and args.horizon < 1:
            raise ConfigError("--horizon must be >= 1")
        cfg = RunConfig.from_path(args.config).with_overrides(
            seed=args.seed, mode=args.mode, horizon=args.horizon,
            section=_HORIZON_SECTION[args.verb])
        return COMMANDS[args.verb](cfg, Output(out_dir, cfg, args.verb))
    except WreathGrowthError as exc:
        code = exc.exit_code
        body = _error(exc, code)
    except (MemoryError, RecursionError, OverflowError) as exc:
        code = 3
        body = _error(exc, code)
    text = json.dumps(body, sort_keys=True, indent=2) + "\n"
    sys.stderr.write(text)
    try:
        atomic_write(out_dir / "error.json", text)
    except OSError:
        pass
    return code


if __name__ == "__main__":
    sys.exit(main())
