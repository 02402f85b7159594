"""corado: command-line interface for coRado constructions and checks."""

from __future__ import annotations

import argparse
import json
import logging
import sys
import time
from dataclasses import dataclass
from typing import Any, Callable

from . import __version__
from .bergman import BergmanFan, Vanished, bergman_fan, fans_equal, is_strict_gammoid, is_transversal, stable_intersection_with_hyperplanes
from .chow import degree, dhr_check, monomial_basis, product_class, relative_nested_quotient
from .core import Matroid, dual, hyperplane_matroid
from .errors import MatroidError
from .fanxml import parse_fan_xml_file, write_fan_xml_file
from .formats import (
    load_text,
    matroid_payload,
    parse_graph,
    parse_matroid,
    parse_monomial,
    parse_subset,
    parse_system,
    render_matroid,
    subset_labels,
    system_payload,
)
from .ops import intersect_all, intersection_via_spanning_sets, principal_truncation, union
from .rado import SetSystem, corado, rado_matching, rado_matroid, transversal_matroid
from .sweeps import SweepReport, verify_dhr, verify_gammoids, verify_quotients, verify_rado, verify_theorem

log = logging.getLogger("corado")


@dataclass
class Outcome:
    """What a subcommand prints: ``text`` normally, ``result``/``witnesses`` under --json."""

    text: str
    result: Any
    witnesses: Any = None
    ok: bool = True


# ---------------------------------------------------------------------------
# Rendering helpers
# ---------------------------------------------------------------------------


def _family(m: Matroid, masks: tuple[int, ...] | list[int]) -> str:
    return ", ".join(m.ground.format(x) for x in masks) if masks else "(none)"


def _matroid_text(m: Matroid) -> str:
    return "\n".join([
        f"ground: {' '.join(m.ground.labels)}",
        f"rank: {m.rank}",
        f"bases ({len(m.bases)}): {_family(m, m.bases)}",
    ])


def _matroid_outcome(m: Matroid) -> Outcome:
    return Outcome(_matroid_text(m), matroid_payload(m) | {"rank": m.rank})


def _load_matroid(source: str) -> Matroid:
    return parse_matroid(load_text(source))


def _load_system(source: str, m: Matroid) -> SetSystem:
    return parse_system(load_text(source), m.ground)


def _fan_text(fan: BergmanFan) -> str:
    lines = [f"rays ({len(fan.rays)}):"]
    for flat, vector in fan.rays.items():
        lines.append(f"  e_{fan.ground.format(flat)} = ({' '.join(map(str, vector))})")
    lines.append(f"maximal cones ({len(fan.maximal_cones)}), dimension {fan.dimension}:")
    for cone in fan.maximal_cones:
        lines.append("  {" + ", ".join(fan.ground.format(f) for f in cone) + "}")
    return "\n".join(lines)


def _fan_payload(fan: BergmanFan) -> dict[str, Any]:
    return {
        "ground": list(fan.ground.labels),
        "rays": {" ".join(subset_labels(fan.ground, f)): list(v) for f, v in fan.rays.items()},
        "maximal_cones": [[subset_labels(fan.ground, f) for f in cone] for cone in fan.maximal_cones],
    }


def _report_outcome(report: SweepReport) -> Outcome:
    payload = {"sweep": report.name, "instances": report.instances, "counterexample": report.counterexample}
    return Outcome(report.summary(), payload, ok=report.ok)


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------


def cmd_show(args: argparse.Namespace) -> Outcome:
    m = _load_matroid(args.matroid)
    text = "\n".join([
        _matroid_text(m),
        f"flats ({len(m.flats)}): {_family(m, m.flats)}",
        f"circuits ({len(m.circuits)}): {_family(m, m.circuits)}",
        f"loops: {m.ground.format(m.loops)}",
        f"coloops: {m.ground.format(m.coloops)}",
    ])
    result = matroid_payload(m) | {
        "rank": m.rank,
        "flats": [subset_labels(m.ground, f) for f in m.flats],
        "circuits": [subset_labels(m.ground, c) for c in m.circuits],
        "loops": subset_labels(m.ground, m.loops),
        "coloops": subset_labels(m.ground, m.coloops),
    }
    return Outcome(text, result)


def cmd_dual(args: argparse.Namespace) -> Outcome:
    return _matroid_outcome(dual(_load_matroid(args.matroid)))


def cmd_render(args: argparse.Namespace) -> Outcome:
    m = _load_matroid(args.matroid)
    return Outcome(render_matroid(m).rstrip("\n"), matroid_payload(m))


def cmd_union(args: argparse.Namespace) -> Outcome:
    return _matroid_outcome(union(_load_matroid(args.first), _load_matroid(args.second)))


def cmd_intersect(args: argparse.Namespace) -> Outcome:
    matroids = [_load_matroid(src) for src in args.matroids]
    result = intersect_all(*matroids)
    outcome = _matroid_outcome(result)
    if args.check:
        other = matroids[0]
        for m in matroids[1:]:
            other = intersection_via_spanning_sets(other, m)
        agree = other == result
        outcome.text += "\nroutes agree" if agree else "\nroutes DISAGREE"
        outcome.witnesses = {"spanning_sets_route": matroid_payload(other)}
        outcome.ok = agree
    return outcome


def cmd_truncate(args: argparse.Namespace) -> Outcome:
    m = _load_matroid(args.matroid)
    return _matroid_outcome(principal_truncation(m, parse_subset(args.flat, m.ground)))


def cmd_corado(args: argparse.Namespace) -> Outcome:
    m = _load_matroid(args.matroid)
    system = _load_system(args.system, m)

    def meet() -> Matroid:
        return intersect_all(m, *(hyperplane_matroid(m.ground, a) for a in system.members))

    if args.via_intersection:
        return _matroid_outcome(meet())
    result = corado(m, system)
    outcome = _matroid_outcome(result)
    if args.check:
        other = meet()
        agree = other == result
        outcome.text += "\nroutes agree" if agree else "\nroutes DISAGREE"
        outcome.witnesses = {"intersection_route": matroid_payload(other), "agree": agree}
        outcome.ok = agree
    return outcome


def cmd_rado(args: argparse.Namespace) -> Outcome:
    graph = parse_graph(load_text(args.graph))
    m = _load_matroid(args.matroid)
    outcome = _matroid_outcome(rado_matroid(graph, m))
    if args.match is not None:
        wanted = [part.strip() for part in args.match.split(",") if part.strip()]
        matching = rado_matching(graph, m, wanted)
        if matching is None:
            outcome.text += f"\n{{{','.join(wanted)}}} has no matching onto an independent set"
        else:
            pairs = ", ".join(f"{u}->{v}" for u, v in matching.items())
            outcome.text += f"\nmatching: {pairs}"
        outcome.witnesses = {"matching": matching}
    return outcome


def cmd_transversal(args: argparse.Namespace) -> Outcome:
    system = parse_system(load_text(args.system))
    return _matroid_outcome(transversal_matroid(system))


def cmd_bergman(args: argparse.Namespace) -> Outcome:
    fan = bergman_fan(_load_matroid(args.matroid))
    if args.xml:
        write_fan_xml_file(fan, args.xml)
        log.info("fan written to %s", args.xml)
    return Outcome(_fan_text(fan), _fan_payload(fan))


def cmd_fans_equal(args: argparse.Namespace) -> Outcome:
    equal = fans_equal(parse_fan_xml_file(args.first), parse_fan_xml_file(args.second))
    return Outcome("true" if equal else "false", equal)


def cmd_stable_intersect(args: argparse.Namespace) -> Outcome:
    m = _load_matroid(args.matroid)
    fan = stable_intersection_with_hyperplanes(m, _load_system(args.system, m))
    if isinstance(fan, Vanished):
        return Outcome(f"vanished (loops: {', '.join(fan.loops)})", {"vanished": True, "loops": list(fan.loops)})
    return Outcome(_fan_text(fan), _fan_payload(fan))


def cmd_chow_product(args: argparse.Namespace) -> Outcome:
    m = _load_matroid(args.matroid)
    cls = product_class(m, _load_system(args.system, m))
    if cls.is_zero:
        return Outcome("zero", {"zero": True})
    outcome = _matroid_outcome(cls.matroid)
    outcome.result |= {"zero": False}
    return outcome


def cmd_chow_basis(args: argparse.Namespace) -> Outcome:
    m = _load_matroid(args.matroid)
    basis = monomial_basis(m, args.degree)
    lines = [f"degree {args.degree}: {len(basis)} monomials"] + [f"  {mono.describe(m.ground)}" for mono in basis]
    result = [
        {"flats": [subset_labels(m.ground, f) for f in mono.flats], "exponents": list(mono.exponents)}
        for mono in basis
    ]
    return Outcome("\n".join(lines), result)


def cmd_chow_quotient(args: argparse.Namespace) -> Outcome:
    m = _load_matroid(args.matroid)
    return _matroid_outcome(relative_nested_quotient(m, parse_monomial(load_text(args.monomial), m)))


def cmd_dhr(args: argparse.Namespace) -> Outcome:
    m = _load_matroid(args.matroid)
    verdict = dhr_check(m, _load_system(args.system, m))
    if verdict:
        return Outcome("true", True)
    witness = ",".join(str(j) for j in verdict.witness or ())
    return Outcome(f"false, witness J={{{witness}}}", False, {"J": list(verdict.witness or ())})


def cmd_degree(args: argparse.Namespace) -> Outcome:
    m = _load_matroid(args.matroid)
    value = degree(m, _load_system(args.system, m))
    return Outcome(str(value), value)


def _presentation_outcome(found: bool, witness: SetSystem | None) -> Outcome:
    if not found:
        return Outcome("false", False)
    assert witness is not None
    return Outcome(f"true, presentation {witness.describe()}", True, system_payload(witness))


def cmd_gammoid(args: argparse.Namespace) -> Outcome:
    verdict = is_strict_gammoid(_load_matroid(args.matroid), route=args.route, force=args.force)
    return _presentation_outcome(verdict.found, verdict.witness)


def cmd_transversal_check(args: argparse.Namespace) -> Outcome:
    verdict = is_transversal(_load_matroid(args.matroid), force=args.force)
    return _presentation_outcome(verdict.found, verdict.witness)


def cmd_verify_theorem(args: argparse.Namespace) -> Outcome:
    return _report_outcome(verify_theorem(
        args.max_elements, args.max_sets, jobs=args.jobs, up_to_iso=args.up_to_iso, force=args.force
    ))


def cmd_verify_dhr(args: argparse.Namespace) -> Outcome:
    return _report_outcome(verify_dhr(
        args.max_elements, max_rank=args.max_rank, jobs=args.jobs, up_to_iso=args.up_to_iso, force=args.force
    ))


def cmd_verify_rado(args: argparse.Namespace) -> Outcome:
    return _report_outcome(verify_rado(
        args.max_left, max_right=args.max_right, samples=args.samples,
        matroids=args.matroids, seed=args.seed, jobs=args.jobs,
    ))


def cmd_verify_quotients(args: argparse.Namespace) -> Outcome:
    return _report_outcome(verify_quotients(
        args.max_elements, jobs=args.jobs, up_to_iso=args.up_to_iso, force=args.force
    ))


def cmd_verify_gammoid(args: argparse.Namespace) -> Outcome:
    return _report_outcome(verify_gammoids(
        args.max_elements, jobs=args.jobs, up_to_iso=args.up_to_iso, force=args.force
    ))


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=False, help="Machine-readable output")
    common.add_argument("-v", "--verbose", action="store_true", default=False, help="Log progress to stderr")

    p = argparse.ArgumentParser(
        prog="corado",
        description="Exact finite matroid computations: coRado matroids, Bergman fans, simplicial Chow products.",
    )
    p.add_argument(
        "-V", "--version",
        action="version",
        version=f"%(prog)s {__version__}",
    )
    sub = p.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def command(parent, name: str, handler: Callable[[argparse.Namespace], Outcome], help: str) -> argparse.ArgumentParser:
        sp = parent.add_parser(name, parents=[common], help=help, description=help)
        sp.set_defaults(handler=handler)
        return sp

    def with_system(sp: argparse.ArgumentParser) -> None:
        sp.add_argument("matroid", help="Matroid spec: path, inline JSON, or - for stdin")
        sp.add_argument("--system", required=True, help="Set system: JSON array of subsets or {\"members\": ...}")

    sp = command(sub, "show", cmd_show, "Bases, rank, flats, circuits and loops of a matroid")
    sp.add_argument("matroid")
    sp = command(sub, "render", cmd_render, "Canonical bases-form spec of a matroid")
    sp.add_argument("matroid")
    sp = command(sub, "dual", cmd_dual, "Dual matroid")
    sp.add_argument("matroid")
    sp = command(sub, "union", cmd_union, "Matroid union M ∨ N")
    sp.add_argument("first")
    sp.add_argument("second")
    sp = command(sub, "intersect", cmd_intersect, "Matroid intersection M ∧ N ∧ ...")
    sp.add_argument("matroids", nargs="+")
    sp.add_argument("--check", action="store_true", help="Also compute through spanning sets and compare")
    sp = command(sub, "truncate", cmd_truncate, "Principal truncation at a flat")
    sp.add_argument("matroid")
    sp.add_argument("--flat", required=True, help="Subset as a JSON array or comma-separated labels")

    sp = command(sub, "corado", cmd_corado, "coRado matroid (R_{G(A),N})* of a matroid and a set system")
    with_system(sp)
    route = sp.add_mutually_exclusive_group()
    route.add_argument("--via-intersection", action="store_true", help="Compute M ∧ H_A1 ∧ ... instead")
    route.add_argument("--check", action="store_true", help="Compute both routes and compare")

    sp = command(sub, "rado", cmd_rado, "Rado matroid of a bipartite graph and a matroid on its right part")
    sp.add_argument("graph", help="{\"left\": [...], \"right\": [...], \"edges\": [[l, r], ...]}")
    sp.add_argument("matroid")
    sp.add_argument("--match", default=None, help="Comma-separated left labels to match explicitly")
    sp = command(sub, "transversal", cmd_transversal, "Transversal matroid of a set system (with 'ground')")
    sp.add_argument("system")

    sp = command(sub, "bergman", cmd_bergman, "Bergman fan of a loopless matroid")
    sp.add_argument("matroid")
    sp.add_argument("--xml", default=None, help="Also write the fan as an XML document")
    sp = command(sub, "fans-equal", cmd_fans_equal, "Compare two fan XML documents")
    sp.add_argument("first")
    sp.add_argument("second")
    sp = command(sub, "stable-intersect", cmd_stable_intersect, "Stable intersection with tropical hyperplanes")
    with_system(sp)

    chow = sub.add_parser("chow", help="Simplicial-generator products in the Chow ring")
    chow_sub = chow.add_subparsers(dest="chow_command", required=True, metavar="ACTION")
    sp = command(chow_sub, "product", cmd_chow_product, "Bergman class of h_A1 ... h_Am")
    with_system(sp)
    sp = command(chow_sub, "basis", cmd_chow_basis, "Simplicial monomial basis in a given degree")
    sp.add_argument("matroid")
    sp.add_argument("--degree", type=int, required=True)
    sp = command(chow_sub, "quotient", cmd_chow_quotient, "Relative nested quotient of a basis monomial")
    sp.add_argument("matroid")
    sp.add_argument("--monomial", required=True, help="{\"flats\": [[...], ...], \"exponents\": [...]}")

    sp = command(sub, "dhr", cmd_dhr, "Dragon-Hall-Rado condition")
    with_system(sp)
    sp = command(sub, "degree", cmd_degree, "Degree of a top-degree product of simplicial generators")
    with_system(sp)

    sp = command(sub, "gammoid", cmd_gammoid, "Strict gammoid recognition")
    sp.add_argument("matroid")
    sp.add_argument("--route", choices=["both", "hyperplanes", "transversal"], default="both")
    sp.add_argument("--force", action="store_true", help="Search beyond the ground-set limit")
    sp = command(sub, "transversal-check", cmd_transversal_check, "Transversal matroid recognition")
    sp.add_argument("matroid")
    sp.add_argument("--force", action="store_true", help="Search beyond the ground-set limit")

    verify = sub.add_parser("verify", help="Exhaustive verification sweeps")
    verify_sub = verify.add_subparsers(dest="verify_command", required=True, metavar="SWEEP")

    def sweep(name: str, handler: Callable[[argparse.Namespace], Outcome], help: str) -> argparse.ArgumentParser:
        sp = command(verify_sub, name, handler, help)
        sp.add_argument("--jobs", type=int, default=1, help="Worker processes (default: 1)")
        return sp

    def matroid_sweep(name: str, handler: Callable[[argparse.Namespace], Outcome], help: str) -> argparse.ArgumentParser:
        sp = sweep(name, handler, help)
        sp.add_argument("--max-elements", type=int, default=4)
        sp.add_argument("--up-to-iso", action="store_true", help="One matroid per isomorphism class")
        sp.add_argument("--force", action="store_true", help="Allow more than 6 elements")
        return sp

    sp = matroid_sweep("theorem", cmd_verify_theorem, "coRado = iterated intersection")
    sp.add_argument("--max-sets", type=int, default=2)
    sp = matroid_sweep("dhr", cmd_verify_dhr, "degree 1 ⇔ DHR ⇔ avoiding transversals")
    sp.add_argument("--max-rank", type=int, default=4)
    matroid_sweep("quotients", cmd_verify_quotients, "Relative nested quotients are loopless of the right rank")
    matroid_sweep("gammoid", cmd_verify_gammoid, "Strict gammoid routes agree")
    sp = sweep("rado", cmd_verify_rado, "Rado criterion = matching search")
    sp.add_argument("--max-left", type=int, default=3)
    sp.add_argument("--max-right", type=int, default=4)
    sp.add_argument("--samples", type=int, default=50, help="Random graphs per size beyond exhaustive range")
    sp.add_argument("--matroids", type=int, default=20, help="Random right-side matroids per size")
    sp.add_argument("--seed", type=int, default=0)
    return p


def _configure_logging(verbose: bool) -> None:
    for handler in list(log.handlers):
        log.removeHandler(handler)
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter("[corado] %(message)s"))
    log.addHandler(handler)
    log.setLevel(logging.DEBUG if verbose else logging.WARNING)
    log.propagate = False


def run(argv: list[str] | None = None) -> int:
    """Parse ``argv``, run one subcommand, print its outcome; return the exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2

    _configure_logging(args.verbose)
    start = time.perf_counter()
    try:
        outcome = args.handler(args)
    except FileNotFoundError as exc:
        print(f"Error: file not found: {exc.filename}", file=sys.stderr)
        return 1
    except MatroidError as exc:
        print(f"Error: {exc}", file=sys.stderr)
        return 1
    elapsed = time.perf_counter() - start
    log.debug("%s finished in %.3fs", args.command, elapsed)

    if args.json:
        doc: dict[str, Any] = {"result": outcome.result}
        if outcome.witnesses is not None:
            doc["witnesses"] = outcome.witnesses
        doc["timings"] = {"seconds": round(elapsed, 6)}
        print(json.dumps(doc, indent=2, ensure_ascii=False))
    else:
        print(outcome.text)
    return 0 if outcome.ok else 1


def main(argv: list[str] | None = None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
