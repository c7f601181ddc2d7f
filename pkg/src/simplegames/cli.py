"""Command-line interface: ``sg analyze | verify | certificate | construct | enumerate``."""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import random
import sys
import time
from fractions import Fraction

from simplegames import constructions as cons
from simplegames.cert_search import DEFAULT_MAX_LEN, UNBOUNDED, compute_f, compute_g
from simplegames.enumeration import enumerate_games, sweep
from simplegames.game_core import (
    GameError,
    ParseError,
    SimpleGame,
    classify,
    format_coalition,
    format_game,
    parse_game,
)
from simplegames.lp_solver import (
    FarkasWitness,
    FlavorMismatchError,
    Representation,
    check_rough,
    check_weighted,
    normalize_witness,
    parse_representation,
    verify_representation,
    witness_certificate,
)
from simplegames.trade_algebra import (
    Certificate,
    InvalidTransformError,
    expand,
    format_certificate,
    parse_certificate,
    verify_certificate,
)

SCHEMA = 1
EXIT_OK, EXIT_FALSE, EXIT_PARSE, EXIT_USAGE, EXIT_INCONCLUSIVE = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


# -- serialization ---------------------------------------------------------------------

def rational(q) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def length_value(v):
    if v is None:
        return None
    return "unbounded" if v == UNBOUNDED else int(v)


def rep_json(rep: Representation) -> dict:
    return {"flavor": rep.flavor, "quota": rational(rep.quota), "weights": [rational(w) for w in rep.weights]}


def cert_json(cert: Certificate) -> dict:
    t = cert.transform
    return {
        "length": len(cert),
        "potent": cert.potent,
        "winners": [format_coalition(m) for m in expand(t.winners)],
        "losers": [format_coalition(m) for m in expand(t.losers)],
    }


def witness_json(wit: FarkasWitness) -> dict:
    return {
        "kind": wit.kind,
        "terms": [{"winning": format_coalition(x), "losing": format_coalition(y), "multiplicity": r}
                  for x, y, r in wit.terms],
        "u": list(wit.u),
    }


def digest(game: SimpleGame) -> str:
    return hashlib.sha256(format_game(game).encode()).hexdigest()


def dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)


def read_game(path: str) -> SimpleGame:
    with open(path, encoding="utf-8") as fh:
        return parse_game(fh.read())


def write_out(text: str, path: str | None) -> None:
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# -- commands ----------------------------------------------------------------------

def analyze(game: SimpleGame, max_len: int = DEFAULT_MAX_LEN, search: bool = True,
            timings: bool = False) -> dict:
    """Weighted check, then the rough check, then optionally the shortest certificates."""
    clock = {}
    t0 = time.perf_counter()
    cls = classify(game)
    wres = check_weighted(game)
    clock["weighted_ms"] = (time.perf_counter() - t0) * 1000
    report = {
        "schema": SCHEMA,
        "game_digest": digest(game),
        "players": game.n,
        "class": cls.as_dict(),
        "representation": None,
        "weighted_witness": None,
        "certificate": None,
        "f": None,
        "g": None,
        "exact": True,
    }
    if isinstance(wres, Representation):
        report["verdict"] = "weighted"
        report["representation"] = rep_json(wres)
        report["f"] = report["g"] = "unbounded"
    else:
        t1 = time.perf_counter()
        rres = check_rough(game)
        clock["rough_ms"] = (time.perf_counter() - t1) * 1000
        report["weighted_witness"] = witness_json(wres)
        if isinstance(rres, Representation):
            report["verdict"] = "roughly_weighted"
            report["representation"] = rep_json(rres)
            report["certificate"] = cert_json(witness_certificate(game, wres))
            report["g"] = "unbounded"
        else:
            report["verdict"] = "not_roughly_weighted"
            report["certificate"] = cert_json(normalize_witness(game, rres))
        if search:
            t2 = time.perf_counter()
            f = compute_f(game, max_len=max_len)
            report["f"] = length_value(f.value)
            if f.certificate is not None and report["verdict"] == "roughly_weighted":
                report["certificate"] = cert_json(f.certificate)
            report["exact"] = f.exact
            if report["verdict"] == "not_roughly_weighted":
                g = compute_g(game, max_len=max_len)
                report["g"] = length_value(g.value)
                report["exact"] = report["exact"] and g.exact
                if g.certificate is not None:
                    report["certificate"] = cert_json(g.certificate)
            clock["search_ms"] = (time.perf_counter() - t2) * 1000
        else:
            report["exact"] = False
    if timings:
        report["timings"] = {k: round(v, 3) for k, v in clock.items()}
    return report


def cmd_analyze(args) -> int:
    game = read_game(args.game)
    report = analyze(game, args.max_len, not args.no_search, args.timings)
    sys.stdout.write(dump(report) + "\n")
    if args.strict and not report["exact"]:
        return EXIT_INCONCLUSIVE
    return EXIT_OK


def _load_artifact(arg: str) -> str:
    if os.path.exists(arg):
        with open(arg, encoding="utf-8") as fh:
            return fh.read()
    return arg


def cmd_verify(args) -> int:
    game = read_game(args.game)
    text = _load_artifact(args.artifact)
    if "winners:" in text:
        if args.flavor:
            raise UsageError("--flavor applies to representations, not certificates")
        cert = parse_certificate(text)
        try:
            ok = verify_certificate(game, cert)
        except InvalidTransformError as exc:
            print(f"invalid: {exc}", file=sys.stderr)
            return EXIT_FALSE
        kind = "potent certificate" if cert.potent else "certificate"
    else:
        rep = parse_representation(text, args.flavor)
        try:
            ok = verify_representation(game, rep)
        except ValueError as exc:
            raise UsageError(str(exc))
        kind = f"{rep.flavor} representation"
    if args.json:
        sys.stdout.write(dump({"schema": SCHEMA, "artifact": kind, "valid": ok}) + "\n")
    else:
        print(f"{kind}: {'valid' if ok else 'INVALID'}")
    return EXIT_OK if ok else EXIT_FALSE


def cmd_certificate(args) -> int:
    game = read_game(args.game)
    res = (compute_g if args.potent else compute_f)(game, max_len=args.max_len)
    if args.json:
        out = {"schema": SCHEMA, "potent": args.potent, "length": length_value(res.value),
               "exact": res.exact, "lower_bound": length_value(res.lower_bound),
               "certificate": cert_json(res.certificate) if res.certificate else None}
        write_out(dump(out) + "\n", args.output)
    elif res.certificate is not None:
        write_out(format_certificate(res.certificate), args.output)
    elif res.value == UNBOUNDED:
        print("no certificate exists: the game is " + ("roughly weighted" if args.potent else "weighted"))
    else:
        print(f"inconclusive: no certificate of length <= {args.max_len}; lower bound {res.lower_bound}",
              file=sys.stderr)
    if not res.exact and args.strict:
        return EXIT_INCONCLUSIVE
    return EXIT_OK


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(",", " ").split()]
    except ValueError:
        raise UsageError(f"expected integers, got {text!r}")


def build(args) -> SimpleGame:
    kind = args.kind
    if kind == "fano":
        return cons.fano()
    if kind == "hadamard":
        return cons.hadamard_game(args.k)
    if kind == "cyclic":
        return cons.cyclic_game(_int_list(args.pattern), args.n)
    if kind == "projective":
        return cons.projective_game(args.q)
    if kind == "gn2":
        return cons.gn2_game(args.n)
    if kind == "doubling":
        w = _int_list(args.weights)
        k = args.k if args.k is not None else len(cons.find_relations(w))
        return cons.doubling_game(cons.FishburnSystem.from_weights(w, k), args.threshold)
    if kind == "example2":
        return cons.example2_game()
    if kind == "proper6":
        return cons.example_proper6_game()
    if kind == "un":
        return cons.un_security_council()
    raise UsageError(f"unknown construction {kind!r}")


def cmd_construct(args) -> int:
    for name in ("k", "n", "q", "pattern", "weights"):
        needed = {"hadamard": ("k",), "cyclic": ("n", "pattern"), "projective": ("q",),
                  "gn2": ("n",), "doubling": ("weights",)}.get(args.kind, ())
        if name in needed and getattr(args, name) is None:
            raise UsageError(f"construct {args.kind} needs --{name}")
    write_out(format_game(build(args)), args.output)
    return EXIT_OK


def cmd_enumerate(args) -> int:
    flt = args.filter
    games = None
    if args.sample:
        rng = random.Random(args.seed)
        pool = list(enumerate_games(args.n, flt))
        games = [pool[i] for i in sorted(rng.sample(range(len(pool)), min(args.sample, len(pool))))]
    rep = sweep(args.n, flt, games)
    data = rep.as_dict()
    data["schema"] = SCHEMA
    data["check"] = args.check
    data["violations"] = (rep.not_roughly_weighted if args.check == "rough"
                          else rep.roughly_weighted_only + rep.not_roughly_weighted)
    text = dump(data) + "\n"
    if args.report:
        write_out(text, args.report)
    if args.json or not args.report:
        if args.json:
            sys.stdout.write(text)
        else:
            print(f"n={rep.n} filter={','.join(rep.filter)} games={rep.total_games} "
                  f"weighted={rep.weighted} rough_only={rep.roughly_weighted_only} "
                  f"not_rough={rep.not_roughly_weighted}")
    return EXIT_OK


# -- argument parsing ----------------------------------------------------------------

def make_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="sg", description="Weightedness analysis of simple games.")
    p.add_argument("--threads", type=int, default=1, help="accepted for compatibility; work runs in one thread")
    p.add_argument("--seed", type=int, default=0, help="seed for sampled runs")
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="classify a game and report representations or certificates")
    a.add_argument("game")
    a.add_argument("--max-len", type=int, default=DEFAULT_MAX_LEN)
    a.add_argument("--no-search", action="store_true", help="skip the f/g searches")
    a.add_argument("--timings", action="store_true", help="include per-phase milliseconds")
    a.add_argument("--json", action="store_true", help="JSON output (the default for analyze)")
    a.add_argument("--strict", action="store_true", help="exit 4 if a search cap was hit")
    a.set_defaults(func=cmd_analyze)

    v = sub.add_parser("verify", help="check a representation or certificate against a game")
    v.add_argument("game")
    v.add_argument("artifact", help="file path or inline '[q; w1 w2 ...] flavor'")
    v.add_argument("--flavor", choices=("weighted", "rough"))
    v.add_argument("--json", action="store_true")
    v.set_defaults(func=cmd_verify)

    c = sub.add_parser("certificate", help="shortest (potent) certificate of non-weightedness")
    c.add_argument("game")
    c.add_argument("--potent", action="store_true")
    c.add_argument("--max-len", type=int, default=DEFAULT_MAX_LEN)
    c.add_argument("--json", action="store_true")
    c.add_argument("--strict", action="store_true")
    c.add_argument("-o", "--output")
    c.set_defaults(func=cmd_certificate)

    k = sub.add_parser("construct", help="write a named game family to a .game file")
    k.add_argument("kind", choices=("fano", "hadamard", "cyclic", "projective", "gn2", "doubling",
                                    "example2", "proper6", "un"))
    k.add_argument("--k", type=int)
    k.add_argument("--n", type=int)
    k.add_argument("--q", type=int)
    k.add_argument("--pattern")
    k.add_argument("--weights")
    k.add_argument("--threshold", type=int)
    k.add_argument("-o", "--output")
    k.set_defaults(func=cmd_construct)

    e = sub.add_parser("enumerate", help="sweep all small games")
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--filter", help="comma list of proper, strong, constant-sum (any one suffices)")
    e.add_argument("--check", choices=("rough", "weighted"), default="rough")
    e.add_argument("--report")
    e.add_argument("--sample", type=int, help="analyze only this many games drawn with --seed")
    e.add_argument("--json", action="store_true")
    e.set_defaults(func=cmd_enumerate)
    return p


def main(argv=None) -> int:
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (UsageError, FlavorMismatchError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except GameError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
