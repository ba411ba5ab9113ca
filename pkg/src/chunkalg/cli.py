"""Batch command-line surface.

Subcommands: ``validate``, ``ledger``, ``commute``, ``acs-check``,
``adjunction``, ``church-rosser``.  Every command emits a deterministic JSON
report (``--json``) or a human-readable summary; randomized commands echo
their seed so a run can be reproduced from its report.  Exit codes: 0 on
success / all checks passing, 1 on violations or failed checks, 2 on parse
errors, 3 on I/O errors.
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import Optional

from . import __version__
from .acs import AcsInstance, ChunkAcs, FiniteSetsAcs, SubstAcs
from .axioms import (
    atomic_axiom_check,
    monoid_axiom_check,
    oriented_axiom_check,
    partial_converse_check,
)
from .functors import adjunction_payload, check_adjunction
from .generators import GenConfig, gen_cr_triple, gen_model, stream
from .ieutxo import (
    FAIL,
    Chunk,
    MissingProbeUniverse,
    NotAChunk,
    blocked_utxi,
    blocked_utxo,
    check_chunk,
    check_church_rosser,
    compose,
    ledger_sets,
    pos,
)
from .jsonio import ParseError, dumps, load_model, load_txlist

EXIT_OK = 0
EXIT_VIOLATIONS = 1
EXIT_PARSE = 2
EXIT_IO = 3


def _seed_from(args: argparse.Namespace) -> int:
    if args.seed is not None:
        return args.seed
    env = os.environ.get("CHUNKALG_SEED")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise ParseError(f"CHUNKALG_SEED must be an integer, got {env!r}")
    return 0


def _report(command: str, status: str, payload: dict, seed: Optional[int] = None) -> dict:
    report: dict = {
        "schema_version": 1,
        "command": command,
        "status": status,
        "payload": payload,
    }
    if seed is not None:
        report["seed"] = seed
    return report


def _emit(args: argparse.Namespace, report: dict, human: list[str]) -> None:
    if args.json:
        print(dumps(report))
    else:
        for line in human:
            print(line)


# ---------------------------------------------------------------------------
# Commands


def cmd_validate(args: argparse.Namespace) -> int:
    txs, _model = load_txlist(args.file)
    report = check_chunk(txs)
    payload: dict = {"transactions": len(txs), "check": report.to_obj()}
    status = "ok" if report.ok else "violations"
    if report.ok:
        unspent_in, unspent_out, spent = ledger_sets(txs)
        payload["utxi"] = sorted(unspent_in)
        payload["utxo"] = sorted(unspent_out)
        payload["stx"] = sorted(spent)
        payload["is_blockchain"] = not unspent_in
        human = [
            f"chunk: {len(txs)} transaction(s) valid",
            f"utxi={sorted(unspent_in)} utxo={sorted(unspent_out)} stx={sorted(spent)}",
            f"blockchain: {not unspent_in}",
        ]
    else:
        human = [f"not a chunk: {report.violation}"]
    _emit(args, _report("validate", status, payload), human)
    return EXIT_OK if report.ok else EXIT_VIOLATIONS


def cmd_ledger(args: argparse.Namespace) -> int:
    txs, model = load_txlist(args.file)
    report = check_chunk(txs)
    if not report.ok:
        payload = {"check": report.to_obj()}
        _emit(
            args,
            _report("ledger", "violations", payload),
            [f"not a chunk: {report.violation}"],
        )
        return EXIT_VIOLATIONS
    chunk = Chunk(txs)
    unspent_in, unspent_out, spent = ledger_sets(chunk)
    payload = {
        "utxi": sorted(unspent_in),
        "utxo": sorted(unspent_out),
        "stx": sorted(spent),
        "pos": sorted(pos(chunk)),
        "is_blockchain": not unspent_in,
    }
    human = [
        f"utxi: {sorted(unspent_in)}",
        f"utxo: {sorted(unspent_out)}",
        f"stx:  {sorted(spent)}",
        f"blockchain: {not unspent_in}",
    ]
    probe_model = model
    if args.probe_file:
        probe_model, _ = load_model(args.probe_file)
    if probe_model is not None and probe_model.probe_candidates is not None:
        payload["blocked_utxi"] = sorted(blocked_utxi(chunk, probe_model))
        payload["blocked_utxo"] = sorted(blocked_utxo(chunk, probe_model))
        human.append(
            f"blocked: utxi={payload['blocked_utxi']} utxo={payload['blocked_utxo']}"
        )
    _emit(args, _report("ledger", "ok", payload), human)
    return EXIT_OK


def cmd_commute(args: argparse.Namespace) -> int:
    txs_a, _ = load_txlist(args.file_a)
    txs_b, _ = load_txlist(args.file_b)
    for label, txs in (("first", txs_a), ("second", txs_b)):
        rep = check_chunk(txs)
        if not rep.ok:
            _emit(
                args,
                _report("commute", "violations", {label: rep.to_obj()}),
                [f"{label} file is not a chunk: {rep.violation}"],
            )
            return EXIT_VIOLATIONS
    a, b = Chunk(txs_a), Chunk(txs_b)
    ab, ba = compose(a, b), compose(b, a)
    disjoint = not (pos(a) & pos(b))
    both = ab is not FAIL and ba is not FAIL
    commute = (ab is FAIL) == (ba is FAIL)
    consistent = True
    if ab is not FAIL or ba is not FAIL:
        # with one order defined the three freshness conditions must agree
        consistent = disjoint == both == commute
    payload = {
        "ab_valid": ab is not FAIL,
        "ba_valid": ba is not FAIL,
        "commuting": commute,
        "positions_disjoint": disjoint,
        "freshness_equivalence_consistent": consistent,
    }
    human = [
        f"a·b valid: {ab is not FAIL};  b·a valid: {ba is not FAIL}",
        f"commuting: {commute};  disjoint positions: {disjoint}",
        f"freshness equivalence consistent: {consistent}",
    ]
    status = "ok" if consistent else "violations"
    _emit(args, _report("commute", status, payload), human)
    return EXIT_OK if consistent else EXIT_VIOLATIONS


def _resolve_instance(spec: str, samples: int, seed: int) -> tuple[AcsInstance, list]:
    if spec == "finsets":
        inst = FiniteSetsAcs(("a", "b", "c", "d"))
        return inst, inst.enumerate_carrier()
    if spec == "subst":
        inst = SubstAcs(("a", "b", "c", "d"))
        carrier = inst.enumerate_carrier()
        if len(carrier) > samples:
            carrier = inst.sample_elements(samples, seed)
        return inst, carrier
    if spec.startswith("chunks:"):
        model, _ = load_model(spec.split(":", 1)[1])
        if model.probe_candidates is None:
            model.probe_candidates = model.transactions
        inst = ChunkAcs(model)
        return inst, inst.sample_elements(samples, seed)
    raise ParseError(
        f"unknown instance {spec!r}; expected finsets | subst | chunks:<model-file>"
    )


def cmd_acs_check(args: argparse.Namespace) -> int:
    seed = _seed_from(args)
    inst, elements = _resolve_instance(args.instance, args.samples, seed)
    probes = elements if len(elements) <= 32 else inst.sample_elements(32, seed + 1)
    reports = [
        monoid_axiom_check(inst, elements, seed=seed),
        oriented_axiom_check(inst, elements, seed=seed, probes=probes),
        atomic_axiom_check(inst, elements, seed=seed, strict=args.strict or None),
        partial_converse_check(inst, elements, seed=seed, probes=probes),
    ]
    ok = all(r.ok for r in reports)
    payload = {
        "instance": inst.name,
        "elements": len(elements),
        "strict": bool(args.strict),
        "reports": [r.to_obj() for r in reports],
    }
    human = [f"instance {inst.name}: {len(elements)} elements"]
    for r in reports:
        human.append(f"  {r.kind}: {'pass' if r.ok else 'FAIL'}")
        for law in r.results:
            if not law.ok:
                human.append(f"    {law.law}: FAIL {law.witnesses[:2]}")
    _emit(args, _report("acs-check", "ok" if ok else "violations", payload, seed), human)
    return EXIT_OK if ok else EXIT_VIOLATIONS


def cmd_adjunction(args: argparse.Namespace) -> int:
    seed = _seed_from(args)
    probe_defaulted = False
    if args.model:
        model, _ = load_model(args.model)
        if model.probe_candidates is None:
            model.probe_candidates = model.transactions
            probe_defaulted = True
    else:
        cfg = GenConfig(seed=seed, max_txs=4)
        model = gen_model(cfg, stream(cfg), name=f"gen{seed}")
    inst = ChunkAcs(model)
    report = check_adjunction(
        model, inst, seed=seed, samples=args.samples, strict=args.strict
    )
    payload = adjunction_payload(report, model, inst)
    if probe_defaulted:
        payload["probe_universe_defaulted_to_enumeration"] = True
    ok = report.ok
    human = [f"model {model.name}: adjunction {'pass' if ok else 'FAIL'}"]
    for law in report.results:
        human.append(f"  {law.law}: {'pass' if law.ok else 'FAIL'}")
    _emit(args, _report("adjunction", "ok" if ok else "violations", payload, seed), human)
    return EXIT_OK if ok else EXIT_VIOLATIONS


def cmd_church_rosser(args: argparse.Namespace) -> int:
    seed = _seed_from(args)
    if args.files:
        y_txs, _ = load_txlist(args.files[0])
        x_txs, _ = load_txlist(args.files[1])
        x2_txs, _ = load_txlist(args.files[2])
        try:
            triples = [(Chunk(y_txs), Chunk(x_txs), Chunk(x2_txs))]
        except NotAChunk as exc:
            _emit(
                args,
                _report("church-rosser", "violations", {"check": exc.report.to_obj()}),
                [f"input is not a chunk: {exc.report.violation}"],
            )
            return EXIT_VIOLATIONS
    else:
        cfg = GenConfig(seed=seed)
        rng = stream(cfg)
        triples = [gen_cr_triple(cfg, rng) for _ in range(args.samples)]
    outcomes: dict[str, int] = {}
    first_bad = None
    for y, x, x2 in triples:
        rep = check_church_rosser(y, x, x2)
        outcomes[rep.status] = outcomes.get(rep.status, 0) + 1
        if rep.status == "CounterexampleFound" and first_bad is None:
            first_bad = rep.to_obj()
    ok = outcomes.get("CounterexampleFound", 0) == 0
    payload = {"triples": len(triples), "outcomes": outcomes}
    if first_bad:
        payload["counterexample"] = first_bad
    human = [f"{len(triples)} triple(s): {outcomes}"]
    _emit(
        args,
        _report("church-rosser", "ok" if ok else "violations", payload, seed),
        human,
    )
    return EXIT_OK if ok else EXIT_VIOLATIONS


# ---------------------------------------------------------------------------
# Entry point


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chunkalg",
        description="Validate transaction lists, query ledgers, and audit chunk-system laws.",
    )
    parser.add_argument("--version", action="version", version=f"chunkalg {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, seeded: bool = False) -> None:
        p.add_argument("--json", action="store_true", help="emit the JSON report")
        if seeded:
            p.add_argument("--seed", type=int, default=None, help="RNG seed (or CHUNKALG_SEED)")
            p.add_argument("--samples", type=int, default=200, help="sample count")

    p = sub.add_parser("validate", help="check a transaction list file")
    p.add_argument("file")
    common(p)
    p.set_defaults(handler=cmd_validate)

    p = sub.add_parser("ledger", help="unspent/spent channel sets of a chunk file")
    p.add_argument("file")
    p.add_argument("--probe-file", default=None, help="model file providing probe candidates")
    common(p)
    p.set_defaults(handler=cmd_ledger)

    p = sub.add_parser("commute", help="compare both composition orders of two chunk files")
    p.add_argument("file_a")
    p.add_argument("file_b")
    common(p)
    p.set_defaults(handler=cmd_commute)

    p = sub.add_parser("acs-check", help="run the axiom checkers on an instance")
    p.add_argument("instance", help="finsets | subst | chunks:<model-file>")
    p.add_argument("--strict", action="store_true", help="require perfectly-atomic laws")
    common(p, seeded=True)
    p.set_defaults(handler=cmd_acs_check)

    p = sub.add_parser("adjunction", help="round-trip checks for a model")
    p.add_argument("--model", default=None, help="model file (default: generate)")
    p.add_argument("--strict", action="store_true", help="also require the counit bijective")
    common(p, seeded=True)
    p.set_defaults(handler=cmd_adjunction)

    p = sub.add_parser("church-rosser", help="confluence premises and conclusions")
    p.add_argument("--files", nargs=3, metavar=("Y", "X", "X2"), default=None)
    common(p, seeded=True)
    p.set_defaults(handler=cmd_church_rosser)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except MissingProbeUniverse as exc:
        print(f"missing probe universe for model {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
