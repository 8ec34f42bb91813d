"""Command-line front end.  Exit codes: 0 positive, 1 negative, 2 error."""
from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import choice
from .calculus import ProofFormatError, check_proof, parse_proof
from .choice import ChoiceModel, ExplicitTable, OrderBacked, Pair
from .classical import MissingAtomError, TooManyAtomsError
from .collapse import DEFAULT_PATTERN_CAP, PatternExplosionError, collapse, enumerate_collapses
from .decision import Verdict, entails, interpret, is_satisfiable, is_tautology, model_check
from .syntax import ParseError, dual, parse, to_text

CLASS_SELECTORS = {
    "f": choice.F,
    "asso": choice.ASSO,
    "reg": choice.REG,
    "reg*": choice.REG_STAR,
    "dec": choice.DEC,
    "dec-tb": choice.DEC_TOP_BEFORE_BOT,
    "dec-bt": choice.DEC_BOT_BEFORE_TOP,
    "dec-top": choice.DEC_TOP_LEAST,
    "dec-bot": choice.DEC_BOT_LEAST,
}


class CliError(Exception):
    pass


# -- model files -----------------------------------------------------------------

def model_to_json(model: Optional[ChoiceModel]) -> dict:
    if isinstance(model, OrderBacked):
        return {"order": [to_text(s) for s in model.order]}
    if isinstance(model, ExplicitTable):
        rows = sorted(model.entries.items(), key=lambda kv: str(kv[0]))
        return {"table": [{"pair": [to_text(k.first), to_text(k.second)], "choice": to_text(v)}
                          for k, v in rows]}
    return {}


def witness_to_json(verdict: Verdict) -> Optional[dict]:
    if verdict.assignment is None:
        return None
    return {"assignment": dict(sorted(verdict.assignment.items())), **model_to_json(verdict.model)}


def model_from_json(doc: dict) -> tuple[dict, ChoiceModel]:
    if not isinstance(doc, dict) or not isinstance(doc.get("assignment", {}), dict):
        raise CliError("model file must be an object with an 'assignment' map")
    assignment = doc.get("assignment", {})
    if any(not isinstance(v, bool) for v in assignment.values()):
        raise CliError("assignment values must be booleans")
    if ("order" in doc) == ("table" in doc):
        raise CliError("model file needs exactly one of 'order' or 'table'")
    if "order" in doc:
        return assignment, OrderBacked(tuple(parse(s) for s in doc["order"]))
    entries = {}
    for row in doc["table"]:
        a, b = (parse(s) for s in row["pair"])
        chosen = parse(row["choice"])
        key = Pair.of(a, b)
        if a == b:
            if chosen != a:
                raise CliError(f"choice for {key} must be its member")
            continue
        if key in entries and entries[key] != chosen:
            raise CliError(f"conflicting choices for {key}")
        entries[key] = chosen
    return assignment, ExplicitTable(entries)


def _read_model(path: str) -> tuple[dict, ChoiceModel]:
    with open(path, encoding="utf-8") as fh:
        return model_from_json(json.load(fh))


def _read_sentences(path: str):
    with open(path, encoding="utf-8") as fh:
        lines = [ln.split("#", 1)[0].strip() for ln in fh]
    return [parse(ln) for ln in lines if ln]


# -- output -------------------------------------------------------------------------

def _emit(args, doc: dict, text_lines: Sequence[str]):
    if args.json:
        print(json.dumps(doc, indent=2))
    else:
        for line in text_lines:
            print(line)


def _witness_lines(verdict: Verdict, label: str) -> list[str]:
    w = witness_to_json(verdict)
    if w is None:
        return []
    out = [f"{label}:",
           "  assignment: " + " ".join(f"{k}={int(v)}" for k, v in w["assignment"].items())]
    if "order" in w:
        out.append("  order: " + " < ".join(w["order"]) if w["order"] else "  order: (empty)")
    else:
        out.append("  table:" if w["table"] else "  table: (empty)")
        out += [f"    {{{r['pair'][0]}, {r['pair'][1]}}} -> {r['choice']}" for r in w["table"]]
    return out


# -- commands ---------------------------------------------------------------------

def cmd_taut(args) -> int:
    x = CLASS_SELECTORS[args.cls]
    verdict = is_tautology(parse(args.sentence), x, args.max_patterns)
    _emit(args, {"tautology": verdict.value, "class": str(x), "countermodel": witness_to_json(verdict)},
          [f"{'tautology' if verdict else 'not a tautology'} in {x}"] + _witness_lines(verdict, "countermodel"))
    return 0 if verdict else 1


def cmd_sat(args) -> int:
    x = CLASS_SELECTORS[args.cls]
    verdict = is_satisfiable(_read_sentences(args.file), x, args.max_patterns)
    _emit(args, {"satisfiable": verdict.value, "class": str(x), "model": witness_to_json(verdict)},
          [f"{'satisfiable' if verdict else 'unsatisfiable'} in {x}"] + _witness_lines(verdict, "model"))
    return 0 if verdict else 1


def cmd_entail(args) -> int:
    x = CLASS_SELECTORS[args.cls]
    verdict = entails(_read_sentences(args.premises), parse(args.sentence), x, args.max_patterns)
    _emit(args, {"entails": verdict.value, "class": str(x), "countermodel": witness_to_json(verdict)},
          [f"{'entailed' if verdict else 'not entailed'} in {x}"] + _witness_lines(verdict, "countermodel"))
    return 0 if verdict else 1


def cmd_eval(args) -> int:
    assignment, model = _read_model(args.model)
    value = model_check(assignment, model, parse(args.sentence))
    _emit(args, {"value": value}, ["true" if value else "false"])
    return 0 if value else 1


def cmd_collapse(args) -> int:
    _, model = _read_model(args.model)
    result = to_text(collapse(model, parse(args.sentence)))
    _emit(args, {"collapse": result}, [result])
    return 0


def cmd_patterns(args) -> int:
    patterns = enumerate_collapses(parse(args.sentence), args.max_patterns)
    doc = {"patterns": [{"result": to_text(p.result),
                         "commitments": [{"pair": [to_text(k.first), to_text(k.second)], "choice": to_text(v)}
                                         for k, v in sorted(p.commitments, key=lambda kv: str(kv[0]))]}
                        for p in patterns]}
    _emit(args, doc, [str(p) for p in patterns])
    return 0


def cmd_dual(args) -> int:
    result = to_text(dual(parse(args.sentence)))
    _emit(args, {"dual": result}, [result])
    return 0


def cmd_interpret(args) -> int:
    result = to_text(interpret(parse(args.sentence), args.mode))
    _emit(args, {"interpretation": result}, [result])
    return 0


def cmd_check_proof(args) -> int:
    with open(args.file, encoding="utf-8") as fh:
        result = check_proof(parse_proof(fh.read()))
    if result:
        _emit(args, {"accepted": True}, ["accepted"])
        return 0
    _emit(args, {"accepted": False, "line": result.line, "reason": result.reason, "message": result.message},
          [f"rejected at line {result.line}: {result.reason} ({result.message})"])
    return 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--max-patterns", type=int, default=DEFAULT_PATTERN_CAP,
                        help="collapse pattern cap (default %(default)s)")
    common.add_argument("--json", action="store_true", help="print one JSON document")
    with_class = argparse.ArgumentParser(add_help=False)
    with_class.add_argument("--class", dest="cls", choices=sorted(CLASS_SELECTORS), default="f")

    parser = argparse.ArgumentParser(prog="pls", description="Propositional superposition logic toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, parents, help_text):
        p = sub.add_parser(name, parents=parents, help=help_text)
        p.set_defaults(func=fn)
        return p

    add("taut", cmd_taut, [common, with_class], "decide tautologyhood").add_argument("sentence")
    add("sat", cmd_sat, [common, with_class], "decide satisfiability of a sentence file").add_argument(
        "--file", required=True)
    p = add("entail", cmd_entail, [common, with_class], "decide entailment from a premise file")
    p.add_argument("--premises", required=True)
    p.add_argument("sentence")
    p = add("eval", cmd_eval, [common], "evaluate under a model file")
    p.add_argument("--model", required=True)
    p.add_argument("sentence")
    p = add("collapse", cmd_collapse, [common], "collapse under a model file")
    p.add_argument("--model", required=True)
    p.add_argument("sentence")
    add("patterns", cmd_patterns, [common], "list all collapse patterns").add_argument("sentence")
    add("dual", cmd_dual, [common], "print the dual sentence").add_argument("sentence")
    p = add("interpret", cmd_interpret, [common], "read | as conjunction or disjunction")
    p.add_argument("--mode", choices=("and", "or"), required=True)
    p.add_argument("sentence")
    add("check-proof", cmd_check_proof, [common], "check a proof file").add_argument("file")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    if args.max_patterns < 1:
        print("error: --max-patterns must be at least 1", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except (ParseError, ProofFormatError, PatternExplosionError, TooManyAtomsError, MissingAtomError,
            choice.DomainError, CliError, OSError, KeyError, TypeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
