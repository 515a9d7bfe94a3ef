"""Command-line entry point.

Reads a graph file, dispatches the requested computation, and emits a
reproducible report (text or JSON).  Exit codes: 0 success, 1 a
verified mathematical property failed, 2 usage or I/O error.
"""

import argparse
import json
import random
import sys

from . import bredon, charlab, kring
from .graphs import GraphError, enumerate_spherical, parse_graph

USAGE_ERROR = 2
ASSERTION_FAILURE = 1


def build_parser():
    p = argparse.ArgumentParser(
        prog="racgk",
        description="K-theory of right-angled Coxeter groups from a graph")
    p.add_argument("subcommand",
                   choices=["ktheory", "bgw", "bredon", "limit", "kunneth",
                            "counterexample", "mv-check", "all"])
    p.add_argument("--input", help="graph file (edge-list, or JSON with --json)")
    p.add_argument("--json-input", action="store_true",
                   help="parse the input file as JSON")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--precision", type=int, default=32,
                   help="2-adic truncation exponent for the completed ring")
    p.add_argument("--kunneth-max", type=int, default=4)
    p.add_argument("--seed", type=int, default=0,
                   help="seed for randomized property samples")
    p.add_argument("--partition", help="partition file for mv-check: two "
                   "lines of whitespace-separated vertex labels")
    p.add_argument("--dump-matrices",
                   help="bredon: write each differential as `row col value` "
                   "triplet lines to FILE.k")
    return p


def load_graph(args):
    if not args.input:
        raise GraphError("subcommand %r requires --input" % args.subcommand)
    with open(args.input, encoding="utf-8") as fh:
        text = fh.read()
    return parse_graph(text, "json" if args.json_input else "edge-list")


def graph_header(graph):
    return {"vertices": list(graph.labels),
            "edges": [list(e) for e in graph.canonical_edge_list()]}


def run_ktheory(graph, args, rng):
    report = kring.presentation_report(graph)
    cliques = enumerate_spherical(graph)
    samples = []
    for _ in range(5):
        a = kring.random_element(graph, cliques, rng, basis=kring.STAR)
        b = kring.random_element(graph, cliques, rng, basis=kring.STAR)
        prod = kring.multiply_star(a, b)
        oracle = kring.multiply_bar(kring.convert_basis(a, kring.BAR),
                                    kring.convert_basis(b, kring.BAR))
        agree = kring.convert_basis(prod, kring.BAR) == oracle
        samples.append({
            "a": kring.element_to_json_dict(a),
            "b": kring.element_to_json_dict(b),
            "product": kring.element_to_json_dict(prod),
            "bases_agree": agree,
        })
    report["sample_products"] = samples
    report["ok"] = all(s["bases_agree"] for s in samples)
    return report


def run_bgw(graph, args, rng):
    pres = kring.presentation_report(graph)
    cliques = enumerate_spherical(graph)
    nonempty = [c for c in cliques if c]
    report = {
        "bar_relations": pres["bar_relations"],
        "additive_structure": {
            "free_part": "Z (constant terms)",
            "two_adic_components": len(nonempty),
            "precision": args.precision,
        },
    }
    # relation spot checks in the completed ring
    relations_ok = True
    for v in graph.labels:
        s = kring.complete(kring.KRingElement.generator(graph, v, kring.BAR),
                           args.precision)
        sq = kring.completed_multiply(s, s)
        two_s = kring.CompletedElement(
            graph, args.precision, 0,
            {graph.mask_of([v]): -2})
        if sq != two_s:
            relations_ok = False
    indices = []
    prev = kring.ideal_power(graph, 1, cliques)
    max_k = 4
    for k in range(2, max_k + 1):
        cur = kring.ideal_power(graph, k, cliques)
        if cur.rank == prev.rank:
            indices.append({"k": k - 1, "index": cur.index_in(prev)})
        else:
            indices.append({"k": k - 1, "index": None,
                            "note": "rank drops from %d to %d"
                            % (prev.rank, cur.rank)})
        prev = cur
    report["ideal_power_indices"] = indices
    report["relations_ok"] = relations_ok
    report["ok"] = relations_ok
    return report


def run_bredon(graph, args, rng):
    complex_ = bredon.build_bredon_complex(graph)
    if getattr(args, "dump_matrices", None):
        for k, d in enumerate(complex_.diffs):
            with open("%s.%d" % (args.dump_matrices, k), "w",
                      encoding="utf-8") as fh:
                for r, row in enumerate(d):
                    for c, x in enumerate(row):
                        if x:
                            fh.write("%d %d %d\n" % (r, c, x))
    coh = bredon.cohomology(complex_)
    d = len(enumerate_spherical(graph))
    ok = (coh[0]["free_rank"] == d and not coh[0]["torsion"]
          and all(c["free_rank"] == 0 and not c["torsion"] for c in coh[1:]))
    return {"ranks": complex_.ranks, "cohomology": coh,
            "clique_count": d, "ok": ok}


def run_limit(graph, args, rng):
    limit = bredon.inverse_limit(graph)
    rho = bredon.rho_surjectivity(graph)
    iso = bredon.clique_basis_isomorphism(graph)
    d = len(enumerate_spherical(graph))
    ok = limit.rank == d and rho["surjective"] and iso["isomorphism"]
    return {"limit_rank": limit.rank, "clique_count": d,
            "rho": rho, "clique_basis_isomorphism": iso, "ok": ok}


def run_kunneth(graph, args, rng):
    reports = [bredon.interval_tensor_kunneth(n, cap=max(args.kunneth_max, 6))
               for n in range(1, args.kunneth_max + 1)]
    return {"cases": reports, "ok": all(r["ok"] for r in reports)}


def run_counterexample(args, rng):
    d8 = charlab.lemma_d8_report()
    c4 = charlab.lemma_c4_real_report()
    return {"dihedral8_to_center": d8, "c4_real_to_c2": c4,
            "ok": d8["ok"] and c4["ok"]}


def run_mv_check(graph, args, rng):
    if not args.partition:
        raise GraphError("mv-check requires --partition")
    with open(args.partition, encoding="utf-8") as fh:
        lines = [l for l in fh.read().splitlines() if l.strip()]
    if len(lines) < 1:
        raise GraphError("partition file needs one or two label lines")
    part1 = lines[0].split()
    part2 = lines[1].split() if len(lines) > 1 else []
    report = kring.mayer_vietoris_check(graph, part1, part2, rng)
    return report


def run_all(graph, args, rng):
    sections = {
        "ktheory": run_ktheory(graph, args, rng),
        "bgw": run_bgw(graph, args, rng),
        "bredon": run_bredon(graph, args, rng),
        "limit": run_limit(graph, args, rng),
        "kunneth": run_kunneth(graph, args, rng),
        "counterexample": run_counterexample(args, rng),
    }
    d = sections["ktheory"]["rank"]
    cross = (sections["bredon"]["cohomology"][0]["free_rank"] == d
             and sections["limit"]["limit_rank"] == d
             and sections["bredon"]["clique_count"] == d)
    sections["rank_cross_check"] = {
        "presentation_rank": d,
        "h0_rank": sections["bredon"]["cohomology"][0]["free_rank"],
        "limit_rank": sections["limit"]["limit_rank"],
        "ok": cross,
    }
    sections["ok"] = cross and all(
        sections[k].get("ok", True) for k in
        ("ktheory", "bgw", "bredon", "limit", "kunneth", "counterexample"))
    return sections


def render_text(report, indent=0):
    pad = "  " * indent
    lines = []
    if isinstance(report, dict):
        for k, v in report.items():
            if isinstance(v, (dict, list)) and v and not _is_flat(v):
                lines.append("%s%s:" % (pad, k))
                lines.extend(render_text(v, indent + 1))
            else:
                lines.append("%s%s: %s" % (pad, k, _flat(v)))
    elif isinstance(report, list):
        for v in report:
            if isinstance(v, (dict, list)) and v and not _is_flat(v):
                lines.append("%s-" % pad)
                lines.extend(render_text(v, indent + 1))
            else:
                lines.append("%s- %s" % (pad, _flat(v)))
    else:
        lines.append("%s%s" % (pad, report))
    return lines


def _is_flat(v):
    if isinstance(v, list):
        return all(not isinstance(x, (dict, list)) for x in v)
    return False


def _flat(v):
    if isinstance(v, bool):
        return "yes" if v else "no"
    return json.dumps(v) if isinstance(v, (dict, list)) else str(v)


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.precision < 1 or args.kunneth_max < 1:
        parser.exit(USAGE_ERROR, "precision and kunneth-max must be >= 1\n")
    rng = random.Random(args.seed)
    try:
        if args.subcommand == "counterexample":
            report = run_counterexample(args, rng)
            header = {}
        elif args.subcommand == "kunneth" and not args.input:
            report = run_kunneth(None, args, rng)
            header = {}
        else:
            graph = load_graph(args)
            header = {"graph": graph_header(graph)}
            runner = {
                "ktheory": run_ktheory, "bgw": run_bgw, "bredon": run_bredon,
                "limit": run_limit, "kunneth": run_kunneth,
                "mv-check": run_mv_check, "all": run_all,
            }[args.subcommand]
            report = runner(graph, args, rng)
    except (GraphError, OSError) as e:
        print("error: %s" % e, file=sys.stderr)
        return USAGE_ERROR
    payload = dict(header)
    payload["subcommand"] = args.subcommand
    payload["seed"] = args.seed
    payload.update(report if isinstance(report, dict) else {"report": report})
    if args.format == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print("\n".join(render_text(payload)))
    return 0 if report.get("ok", True) else ASSERTION_FAILURE


if __name__ == "__main__":
    sys.exit(main())
