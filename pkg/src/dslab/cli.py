"""Command-line entry point: ``dslab <command> ...`` (or ``python3 -m dslab``)."""

from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import dataclass

from . import acceptance, compression as cx, encoding as enc, extremal as ex, growth, synth
from .sequences import as_seq, embedding, to_text


@dataclass
class RunConfig:
    max_leaves: int = cx.DEFAULT_MAX_LEAVES
    max_cap: int = 30
    seed: int = 0
    fmt: str = "text"
    out: str = ""


class Failed(Exception):
    """A hard check failed; the payload has already been printed."""


def emit(cfg: RunConfig, payload, text: str) -> None:
    s = json.dumps(payload, indent=2, sort_keys=True, default=str) if cfg.fmt == "json" else text
    if cfg.out:
        with open(cfg.out, "w") as fh:
            fh.write(s + "\n")
    else:
        print(s)


def _table(rows: list, cols: list) -> str:
    widths = [max(len(str(c)), *(len(str(r.get(c, ""))) for r in rows)) for c in cols]
    lines = ["  ".join(str(c).ljust(w) for c, w in zip(cols, widths))]
    for r in rows:
        lines.append("  ".join(str(r.get(c, "")).ljust(w) for c, w in zip(cols, widths)))
    return "\n".join(lines)


# ---------------------------------------------------------------- encode

def cmd_encode(a, cfg):
    if a.action == "parse":
        e = enc.parse_encoding(a.text)
        emit(cfg, {"input": a.text, "elements": list(e.elements), "ascii": str(e)}, f"{e}  ({e.pretty()})")
    elif a.action == "check":
        r = enc.is_legal_rules(a.text)
        text = f"{r.input}: {'legal' if r.legal else 'illegal'}"
        text += f" (class {r.cls})" if r.cls else ""
        text += f" violations={','.join(r.violations)}" if r.violations else ""
        emit(cfg, r.as_dict(), text)
        if not r.legal:
            raise Failed
    else:
        es = enc.enumerate_legal(a.max_stars)
        rows = [{"encoding": str(e), "class": enc.is_legal_classes(e)} for e in es]
        emit(cfg, rows, "\n".join(f"{r['encoding']}\t{r['class']}" for r in rows))


# ---------------------------------------------------------------- synth

def _entry(p: synth.Prototype) -> dict:
    d = p.as_dict()
    d["trees"] = [t.to_dict() for t in synth.build_trees(p.encoding)]
    return d


def cmd_synth(a, cfg):
    if a.action == "generate":
        trees = synth.build_trees(a.encoding)
        seqs = synth.generate(a.encoding)
        payload = {"encoding": str(enc.parse_encoding(a.encoding)), "class": enc.is_legal_classes(a.encoding),
                   "trees": [t.to_dict() for t in trees], "sequences": [to_text(s) for s in seqs]}
        emit(cfg, payload, "\n".join(to_text(s) for s in seqs))
    elif a.action == "prototypes":
        ps = synth.prototypes()
        text = "\n".join(f"{p.cls:2d}  {p.encoding:10s} {' '.join(to_text(s) for s in p.sequences)}"
                         + ("" if p.printed_match else f"   [printed: {p.printed}]") for p in ps)
        emit(cfg, [_entry(p) for p in ps], text)
    else:
        seqs = [to_text(s) for s in synth.psi_members(a.max_stars)]
        emit(cfg, seqs, "\n".join(seqs))


# ---------------------------------------------------------------- xi

def _stats(s: cx.XiSystem) -> dict:
    x = s.transcript
    return {"i": x.i, "j": x.j, "c": x.c, "leaves": x.n_leaves, "vertices": s.tree.n_vertices,
            "compressions": x.n_comp, "length": len(x.sequence), "alphabet": len(set(x.sequence)),
            "expected_length": cx.expected_length(x.i, x.j, x.n_leaves),
            "expected_alphabet": cx.expected_alphabet(x.j, x.n_leaves)}


def cmd_xi(a, cfg):
    s = cx.build_system(a.i, a.j, a.c, max_leaves=cfg.max_leaves)
    if a.action == "build":
        text = s.transcript.dumps()
        if a.out:
            with open(a.out, "w") as fh:
                fh.write(text)
            emit(cfg, _stats(s), f"wrote {a.out}: {len(s.transcript.sequence)} symbols")
        else:
            emit(cfg, {"header": s.transcript.header(), "tokens": text.split("\n", 1)[1].split()}, text.rstrip("\n"))
    elif a.action == "stats":
        st = _stats(s)
        emit(cfg, st, "\n".join(f"{k}: {v}" for k, v in st.items()))
    else:
        checks = a.checks.split(",")
        sample = None if a.sample == "all" else int(a.sample)
        out = {}
        if "regular" in checks:
            out["regular"] = cx.check_regularity(s.transcript)
        if "qpqp" in checks:
            q = cx.check_qpqp(s.transcript, sample=sample, seed=cfg.seed)
            q.pop("violations", None)
            out["qpqp"] = q
        if "implied" in checks:
            imp = cx.check_implied(s.tree, s.comps, s.transcript.xi, sample=sample, seed=cfg.seed)
            imp.pop("violations", None)
            out["implied"] = imp
        if "execute" in checks:
            r = cx.execute(s.tree, s.comps)
            out["execute"] = {"ok": r.valid, "checked": r.checked, "failures": len(r.failures)}
        emit(cfg, out, "\n".join(f"{k}: {'ok' if v['ok'] else 'FAIL'}" for k, v in out.items()))
        if not all(v["ok"] for v in out.values()):
            raise Failed


# ---------------------------------------------------------------- match / ex / digraph / kv

def _read_text(a):
    if a.text_file:
        with open(a.text_file) as fh:
            raw = fh.read()
        if raw.lstrip().startswith("#") or raw.split()[0][0] in "CV":
            return cx.load_transcript_tokens(raw)[1]
        return as_seq(raw)
    return as_seq(a.text)


def cmd_match(a, cfg):
    occ = embedding(a.pattern, _read_text(a))
    payload = {"pattern": a.pattern, "contained": occ is not None, "positions": occ}
    emit(cfg, payload, "contained at " + " ".join(map(str, occ)) if occ is not None else "not contained")


def cmd_ex(a, cfg):
    if a.cap > cfg.max_cap:
        raise SystemExit(f"--cap must be <= {cfg.max_cap}")
    r = ex.ex_brute(a.pattern, a.n, a.cap)
    ok = ex.validate_witness(a.pattern, a.n, r)
    d = r.as_dict() | {"witness_valid": ok}
    emit(cfg, d, f"{r.kind} {r.value} witness={to_text(r.witness)}")
    if not ok:
        raise Failed


def cmd_digraph(a, cfg):
    g = ex.build_digraph(a.sequence, a.rule)
    sc = ex.is_strongly_connected(g)
    edges = sorted(to_text(e) for e in g.edges)
    text = "edges: " + " ".join(edges)
    if a.check_scc:
        text += f"\nstrongly connected: {sc}"
    emit(cfg, {"sequence": a.sequence, "rule": a.rule, "edges": edges, "strongly_connected": sc}, text)


def cmd_kv(a, cfg):
    items = ex.kv_closure(a.depth, a.max_k, a.max_len)
    emit(cfg, [it.as_dict() for it in items], "\n".join(f"{it.depth}  {to_text(it.sequence)}" for it in items))


# ---------------------------------------------------------------- verify / report

def _grid(a) -> list:
    return [(i, j, c) for i in range(1, a.max_i + 1) for j in range(1, a.max_j + 1) for c in (1, 2)]


def cmd_verify(a, cfg):
    if a.what == "all":
        res = acceptance.run_all()
        emit(cfg, [r.as_dict() for r in res], "\n".join(r.line() for r in res)
             + f"\n{sum(r.ok for r in res)}/{len(res)} criteria pass")
        if not all(r.ok for r in res):
            raise Failed
        return
    if a.what == "thm51":
        r = ex.avoidance_check(synth.psi_members(a.max_stars), _grid(a))
        r["rows"] = len(r["rows"])
        emit(cfg, r, f"checks: {r['rows']}, embeddings: {len(r['violations'])}, skipped: {r['skipped']}")
        if not r["ok"]:
            raise Failed
    elif a.what == "thm52":
        reps = [ex.minimality_check(s, _grid(a)) for p in synth.prototypes() for s in p.sequences]
        rows = [{"pattern": r["pattern"], "found": r["found"], "total": r["total"]} for r in reps]
        emit(cfg, reps, _table(rows, ["pattern", "found", "total"]))
    else:
        r = ex.phi5_report()
        lines = [f"{k} {v['sequence']}: " + " ".join(f"{s}={int(b)}" for s, b in v["contains"].items())
                 for k, v in r["rows"].items()]
        lines += [f"{k}: {v}" for k, v in r["reversals"].items()]
        emit(cfg, r, "\n".join(lines))
        if not r["ok"]:
            raise Failed


def cmd_report(a, cfg):
    grid = [(i, j, c) for i in (1, 2, 3) for j in (1, 2) for c in (1, 2)]
    rows = [r.as_dict() for r in growth.growth_table(grid)]
    emit(cfg, rows, _table(rows, ["i", "j", "c", "leaves", "length", "alphabet", "ratio", "alpha"]))


# ---------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--output", default="", help="write output here instead of stdout")
    common.add_argument("-v", "--verbose", action="store_true")

    ap = argparse.ArgumentParser(prog="dslab", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("encode", help="parse/check/enumerate compact encodings")
    s2 = p.add_subparsers(dest="action", required=True)
    for name in ("parse", "check"):
        q = s2.add_parser(name, parents=[common])
        q.add_argument("text")
    q = s2.add_parser("enumerate", parents=[common])
    q.add_argument("--max-stars", type=int, default=1)
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("synth", help="trees and sequences from encodings")
    s2 = p.add_subparsers(dest="action", required=True)
    q = s2.add_parser("generate", parents=[common])
    q.add_argument("--encoding", required=True)
    s2.add_parser("prototypes", parents=[common])
    q = s2.add_parser("psi", parents=[common])
    q.add_argument("--max-stars", type=int, default=1)
    p.set_defaults(func=cmd_synth)

    p = sub.add_parser("xi", help="path-compression transcripts")
    s2 = p.add_subparsers(dest="action", required=True)
    for name in ("build", "stats", "verify"):
        q = s2.add_parser(name, parents=[common])
        q.add_argument("--i", type=int, required=True)
        q.add_argument("--j", type=int, required=True)
        q.add_argument("--c", type=int, default=1)
        q.add_argument("--max-leaves", type=int, default=None)
        if name == "build":
            q.add_argument("--out", default="")
        if name == "verify":
            q.add_argument("--checks", default="regular,qpqp,implied,execute")
            q.add_argument("--sample", default="all")
    p.set_defaults(func=cmd_xi)

    p = sub.add_parser("match", parents=[common], help="isomorphic subsequence test")
    p.add_argument("--pattern", required=True)
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--text")
    g.add_argument("--text-file")
    p.set_defaults(func=cmd_match)

    p = sub.add_parser("ex", help="brute-force Ex(pattern, n)")
    s2 = p.add_subparsers(dest="action", required=True)
    q = s2.add_parser("brute", parents=[common])
    q.add_argument("--pattern", required=True)
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--cap", type=int, default=20)
    p.set_defaults(func=cmd_ex)

    p = sub.add_parser("digraph", parents=[common], help="Klazar digraph of a sequence")
    p.add_argument("--sequence", required=True)
    p.add_argument("--check-scc", action="store_true")
    p.add_argument("--rule", choices=tuple(ex.DIGRAPH_RULES), default="literal")
    p.set_defaults(func=cmd_digraph)

    p = sub.add_parser("kv", help="Klazar-Valtr grammar closure")
    s2 = p.add_subparsers(dest="action", required=True)
    q = s2.add_parser("closure", parents=[common])
    q.add_argument("--depth", type=int, default=3)
    q.add_argument("--max-k", type=int, default=2)
    q.add_argument("--max-len", type=int, default=12)
    p.set_defaults(func=cmd_kv)

    p = sub.add_parser("verify", parents=[common], help="theorem checks and the acceptance suite")
    p.add_argument("what", choices=("thm51", "thm52", "thm53", "all"))
    p.add_argument("--max-i", type=int, default=2)
    p.add_argument("--max-j", type=int, default=2)
    p.add_argument("--max-stars", type=int, default=1)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("report", parents=[common], help="growth table from closed forms")
    p.set_defaults(func=cmd_report)
    return ap


def main(argv=None) -> int:
    a = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if a.verbose else logging.WARNING, format="%(message)s")
    cfg = RunConfig(seed=a.seed, fmt=a.format, out=a.output,
                    max_leaves=getattr(a, "max_leaves", None) or cx.max_leaves_default())
    try:
        a.func(a, cfg)
    except Failed:
        return 1
    except (ValueError, OSError) as err:
        print(f"dslab: error: {err}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
