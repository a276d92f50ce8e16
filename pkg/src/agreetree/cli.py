"""Command-line interface.

Exit codes: 0 agree / verify passed / ok; 1 disagree / verify failed;
2 parse or validation error; 3 oracle cap exceeded.
"""

import argparse
import os
import sys

from agreetree.bench import fitted_exponent, rows_to_csv, run_benchmark
from agreetree.build import decide_agreement
from agreetree.errors import AgreeTreeError, OracleCapError
from agreetree.generate import (GeneratorConfig, MODE_AGREEING,
                                MODE_PERTURBED, generate_profile)
from agreetree.newick import (parse_newick, read_profile_file,
                              serialize_newick, write_profile_file)
from agreetree.oracle import oracle_decide
from agreetree.profile import Profile
from agreetree.verify import verify_by_clusters, verify_by_embedding


def _load_profile(path):
    trees, table = read_profile_file(path)
    return Profile(trees, table)


def _describe_disagreement(profile, dis, out):
    table = profile.table
    ent = ["%d:%s" % (i, table.name_of(l))
           for i, l in enumerate(dis.position) if l is not None]
    out.write("DISAGREE\n")
    out.write("position: %s\n" % " ".join(ent))
    for i, kids in sorted(dis.children.items()):
        out.write("children[%d]: %s\n"
                  % (i, ",".join(table.name_of(c) for c in kids)))
    for j, blk in enumerate(dis.blocks):
        out.write("block[%d]: %s\n"
                  % (j, ",".join(sorted(table.name_of(c) for c in blk))))


def cmd_check(args):
    profile = _load_profile(args.file)
    outcome = decide_agreement(profile, backend=args.backend)
    if outcome.agrees:
        print("AGREE")
        return 0
    _describe_disagreement(profile, outcome.disagreement, sys.stdout)
    return 1


def cmd_build(args):
    profile = _load_profile(args.file)
    outcome = decide_agreement(profile, backend=args.backend,
                               keep_synthetic=args.keep_synthetic)
    if not outcome.agrees:
        _describe_disagreement(profile, outcome.disagreement, sys.stderr)
        return 1
    text = serialize_newick(outcome.tree)
    if not outcome.tree.labels[outcome.tree.root]:
        sys.stderr.write("note: root carries no label after stripping\n")
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return 0


def cmd_verify(args):
    trees, table = read_profile_file(args.file)
    profile = Profile(trees, table)
    if os.path.exists(args.tree):
        with open(args.tree, "r", encoding="utf-8") as fh:
            cand_text = fh.read().strip()
    else:
        cand_text = args.tree
    candidate = parse_newick(cand_text, table)
    ok = True
    if args.method in ("clusters", "both"):
        ok = ok and verify_by_clusters(profile, candidate)
    if args.method in ("embedding", "both"):
        ok = ok and verify_by_embedding(profile, candidate)
    print("PASS" if ok else "FAIL")
    return 0 if ok else 1


def cmd_gen(args):
    cfg = GeneratorConfig(
        taxa=args.taxa, trees=args.trees, seed=args.seed,
        coverage=args.coverage,
        mode=MODE_PERTURBED if args.perturb else MODE_AGREEING,
        edits=args.perturb, max_children=args.max_children)
    profile = generate_profile(cfg)
    header = ("generated: taxa=%d trees=%d seed=%d coverage=%g "
              "perturb=%d max_children=%d"
              % (args.taxa, args.trees, args.seed, args.coverage,
                 args.perturb, args.max_children))
    if args.output:
        write_profile_file(args.output, profile.trees, header=header)
    else:
        for t in profile.trees:
            print(serialize_newick(t))
    return 0


def cmd_oracle(args):
    profile = _load_profile(args.file)
    agrees, tree = oracle_decide(profile, cap=args.cap)
    if agrees:
        print("AGREE")
        print(serialize_newick(tree, strip_synthetic=True))
        return 0
    print("DISAGREE")
    return 1


def cmd_bench(args):
    taxa = [int(x) for x in args.taxa_list.split(",") if x]
    rows = run_benchmark(taxa, args.trees, args.seed, backend=args.backend,
                         coverage=args.coverage, repeats=args.repeats)
    csv = rows_to_csv(rows)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(csv)
    else:
        sys.stdout.write(csv)
    if len(rows) >= 2:
        sys.stderr.write("fitted exponent (wall vs n): %.3f\n"
                         % fitted_exponent(rows))
    return 0


def build_parser():
    p = argparse.ArgumentParser(
        prog="agreetree",
        description="Agreement supertrees for internally labeled trees")
    sub = p.add_subparsers(dest="command", required=True)

    def add_backend(sp):
        sp.add_argument("--backend", choices=("hdt", "rescan"),
                        default="hdt")

    sp = sub.add_parser("check", help="decide whether a profile agrees")
    sp.add_argument("file")
    add_backend(sp)
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("build", help="write an agreement supertree")
    sp.add_argument("file")
    sp.add_argument("-o", "--output")
    sp.add_argument("--keep-synthetic", action="store_true")
    add_backend(sp)
    sp.set_defaults(func=cmd_build)

    sp = sub.add_parser("verify", help="verify a candidate supertree")
    sp.add_argument("file")
    sp.add_argument("--tree", required=True,
                    help="candidate: a file path or literal Newick")
    sp.add_argument("--method", choices=("clusters", "embedding", "both"),
                    default="both")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("gen", help="generate a random profile")
    sp.add_argument("--taxa", type=int, required=True)
    sp.add_argument("--trees", type=int, required=True)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--coverage", type=float, default=1.0)
    sp.add_argument("--perturb", type=int, default=0)
    sp.add_argument("--max-children", type=int, default=4)
    sp.add_argument("-o", "--output")
    sp.set_defaults(func=cmd_gen)

    sp = sub.add_parser("oracle", help="exhaustive decision (small inputs)")
    sp.add_argument("file")
    sp.add_argument("--cap", type=int, default=6)
    sp.set_defaults(func=cmd_oracle)

    sp = sub.add_parser("bench", help="scaling benchmark, CSV output")
    sp.add_argument("--taxa-list", required=True)
    sp.add_argument("--trees", type=int, required=True)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--coverage", type=float, default=0.8)
    sp.add_argument("--repeats", type=int, default=1)
    sp.add_argument("-o", "--output")
    add_backend(sp)
    sp.set_defaults(func=cmd_bench)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except OracleCapError as exc:
        sys.stderr.write("error: %s\n" % exc)
        return 3
    except (AgreeTreeError, OSError) as exc:
        sys.stderr.write("error: %s\n" % exc)
        return 2


if __name__ == "__main__":
    sys.exit(main())
