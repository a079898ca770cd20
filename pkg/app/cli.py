# app/cli.py
"""Kommandoradsgränssnitt: tabeller, klassificering, reducerbarhet, formella grader och stabilitet.

Varje underkommando bygger en pydantic-rapport som skrivs som JSON (orjson,
sorterade nycklar) eller som justerade tabeller. Samma byggfunktioner används
av HTTP-ytan i app/endpoints/llc.py.
"""
from __future__ import annotations

import argparse
import logging
import sys
from dataclasses import asdict, dataclass
from fractions import Fraction
from pathlib import Path
from typing import Any, Callable, Iterable, Optional

import orjson
from pydantic import BaseModel, Field, ValidationError

from .characters import LabelGroup, SupercuspidalLabel
from .config import settings
from .errors import InvalidOperand, LLCError, MalformedDescriptor
from .finite_reductive import finite_tables
from .galois.descriptor import CentralizerReport, PacketDescriptor, ParamDescriptor
from .galois.packets import assemble_packet, centralizer, cuspidal_support, sp4_from_gsp4
from .galois.presets import PRESET_LABELS, load_preset
from .galois.springer import springer_tables
from .induction.reducibility import decide_reducibility
from .induction.types import InducedRep, ReducibilityReport, normalize_levi
from .qfield import QHalf, QValue, factor, qh_eval
from .rootdata import (
    GROUPS,
    apartment,
    build_root_datum,
    check_group,
    dual_levi,
    levi_labels,
    nilpotent_orbits,
    parahoric_quotients,
    weyl_classes,
)
from .selfcheck import CHECKS, SelfCheckReport, run_selfcheck
from .stability import CANDIDATE_SETS, StabilityCandidate, stability_report
from .supercuspidal import (
    CuspidalDatumSummary,
    depth_zero_table,
    enumerate_tori,
    enumerate_type_templates,
    formal_degree,
    formal_degree_positive_depth,
    representation_name,
)

logger = logging.getLogger("llc.cli")

SUBCOMMANDS = ("tables", "classify", "packet", "reduce", "fdeg", "stability", "selfcheck")
OUTPUT_FORMATS = ("json", "table")

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_BAD_INPUT = 2
EXIT_USAGE = 64


# ----------------------- Session -----------------------
@dataclass(frozen=True)
class SessionConfig:
    group: Optional[str]
    labels: LabelGroup
    output_format: str = "json"
    q0: Optional[int] = None
    convention: str = "plus_for_eta2"

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "SessionConfig":
        declarations = args.labels if args.labels is not None else (settings.label_declarations or PRESET_LABELS)
        fmt = args.format or settings.output_format
        if fmt not in OUTPUT_FORMATS:
            raise InvalidOperand(f"unknown output format {fmt!r}")
        group = getattr(args, "group", None)
        if group is not None:
            check_group(group)
        q0 = args.q0 if args.q0 is not None else settings.default_q0
        return cls(
            group=group,
            labels=LabelGroup.from_declarations(declarations),
            output_format=fmt,
            q0=q0,
            convention=settings.stability_sign_convention,
        )


# ----------------------- Rapporter -----------------------
class EvaluatedValue(BaseModel):
    rational: str
    sqrt_coeff: str
    q0: int
    text: str

    @classmethod
    def of(cls, v: QValue) -> "EvaluatedValue":
        return cls(rational=str(v.rational), sqrt_coeff=str(v.sqrt_coeff), q0=v.q0, text=v.render())


def evaluate(x: QHalf, q0: Optional[int]) -> Optional[EvaluatedValue]:
    return EvaluatedValue.of(qh_eval(x, q0)) if q0 is not None else None


class TablesReport(BaseModel):
    schema_: str = Field(default="v1", serialization_alias="schema")
    group: str
    root_datum: Optional[dict[str, Any]] = None
    weyl: Optional[list[dict[str, Any]]] = None
    orbits: Optional[list[dict[str, Any]]] = None
    parahoric: Optional[list[dict[str, Any]]] = None
    apartment: Optional[list[dict[str, Any]]] = None
    levis: Optional[list[dict[str, Any]]] = None
    springer: Optional[list[dict[str, Any]]] = None
    finite: Optional[list[dict[str, Any]]] = None
    depth_zero: Optional[list[dict[str, Any]]] = None
    templates: Optional[list[dict[str, Any]]] = None
    tori: Optional[list[dict[str, Any]]] = None


class ClassifyReport(BaseModel):
    schema_: str = Field(default="v1", serialization_alias="schema")
    centralizer: CentralizerReport
    packet: PacketDescriptor


class RestrictionReport(BaseModel):
    schema_: str = Field(default="v1", serialization_alias="schema")
    group: str
    case: str
    restriction: list[str]


class FdegReport(BaseModel):
    schema_: str = Field(default="v1", serialization_alias="schema")
    group: str
    rep: str
    name: Optional[str] = None
    fdeg: str
    factored: Optional[str] = None
    exponent: Optional[str] = None       # bara för positivt djup
    value: Optional[EvaluatedValue] = None


# ----------------------- tables -----------------------
def _root_datum(group: str, q0: Optional[int]) -> dict[str, Any]:
    rd = build_root_datum(group)
    return {**asdict(rd), "rank": rd.rank, "positive_roots": list(rd.positive_roots())}


def _springer(group: str, q0: Optional[int]) -> list[dict[str, Any]]:
    return [
        {"table": name, "pair": r.pair, "weyl_rep": r.weyl_rep, "cuspidal": r.cuspidal}
        for name, t in springer_tables().items()
        for r in t.rows
    ]


def _templates(group: str, q0: Optional[int]) -> list[dict[str, Any]]:
    return [{**asdict(t), "verdict": t.verdict} for t in enumerate_type_templates(group)]


TABLE_SECTIONS: dict[str, Callable[[str, Optional[int]], Any]] = {
    "root_datum": _root_datum,
    "weyl": lambda g, q0: [asdict(c) for c in weyl_classes(g)],
    "orbits": lambda g, q0: [asdict(o) for o in nilpotent_orbits()],
    "parahoric": lambda g, q0: [asdict(p) for p in parahoric_quotients(g)],
    "apartment": lambda g, q0: [asdict(f) for f in apartment(g)],
    "levis": lambda g, q0: [{"levi": lv.name, "dual": dual_levi(lv).name} for lv in levi_labels(g)],
    "springer": _springer,
    "finite": lambda g, q0: finite_tables(),
    "depth_zero": lambda g, q0: depth_zero_table(g, q0),
    "templates": _templates,
    "tori": lambda g, q0: [{**asdict(t), "rank": t.rank} for t in enumerate_tori(g)],
}
DEFAULT_SECTIONS = ("root_datum", "weyl", "orbits", "parahoric")


def build_tables(group: str, sections: Iterable[str] = (), q0: Optional[int] = None) -> TablesReport:
    check_group(group)
    chosen = list(sections) or list(DEFAULT_SECTIONS)
    unknown = [s for s in chosen if s not in TABLE_SECTIONS]
    if unknown:
        raise InvalidOperand(f"unknown table section(s): {', '.join(unknown)}")
    return TablesReport(group=group, **{s: TABLE_SECTIONS[s](group, q0) for s in chosen})


# ----------------------- classify / packet -----------------------
def read_json(path: str) -> Any:
    try:
        raw = Path(path).read_bytes()
    except OSError as exc:
        raise InvalidOperand(f"cannot read {path}: {exc.strerror}") from exc
    try:
        return orjson.loads(raw)
    except orjson.JSONDecodeError as exc:
        raise MalformedDescriptor(f"{path} is not valid JSON: {exc}") from exc


def load_descriptor(preset: Optional[str], data: Any, group: Optional[str] = None) -> ParamDescriptor:
    if preset:
        desc = load_preset(preset)
    elif isinstance(data, dict):
        desc = ParamDescriptor.from_data(data)
    elif data is None:
        raise InvalidOperand("give either a preset or a descriptor")
    else:
        raise MalformedDescriptor("a descriptor must be a JSON object")
    if group is not None and desc.group != group:
        raise InvalidOperand(f"descriptor is for {desc.group}, not {group}")
    return desc


def classify_report(desc: ParamDescriptor, labels: LabelGroup) -> ClassifyReport:
    return ClassifyReport(centralizer=centralizer(desc, labels), packet=assemble_packet(desc, labels))


def restriction_report(packet: PacketDescriptor) -> RestrictionReport:
    return RestrictionReport(group=packet.group, case=packet.case, restriction=sp4_from_gsp4(packet))


# ----------------------- reduce -----------------------
class SupercuspidalSpec(BaseModel):
    ref: str
    group: Optional[str] = None
    central_char: str = "1"
    self_dual: bool = False
    fsigma_trivial: list[str] = Field(default_factory=list)
    self_twists: list[str] = Field(default_factory=list)

    def build(self, labels: LabelGroup, default_group: str) -> SupercuspidalLabel:
        return SupercuspidalLabel(
            group=self.group or default_group,
            ref=self.ref,
            central_char=labels.parse(self.central_char),
            self_dual=self.self_dual,
            fsigma_trivial=tuple(labels.parse(c) for c in self.fsigma_trivial),
            self_twists=tuple(labels.parse(c) for c in self.self_twists),
        )


class ReduceRequest(BaseModel):
    group: str
    levi: str = "T"
    chi1: Optional[str] = None
    chi2: Optional[str] = None
    theta: Optional[str] = None
    beta: str = "0"
    chi: Optional[str] = None
    sc: Optional[SupercuspidalSpec] = None

    def build(self, labels: LabelGroup) -> InducedRep:
        group = check_group(self.group)
        levi = normalize_levi(group, self.levi)

        def char(text: Optional[str]):
            return labels.parse(text) if text is not None else None

        try:
            beta = Fraction(self.beta)
        except (ValueError, ZeroDivisionError) as exc:
            raise InvalidOperand(f"beta must be a rational number, got {self.beta!r}") from exc
        if levi == "T":
            return InducedRep(group=group, levi=levi, chi1=char(self.chi1), chi2=char(self.chi2), theta=char(self.theta))
        if self.sc is None:
            raise InvalidOperand(f"induction from {levi} needs a supercuspidal (--sc)")
        if levi == normalize_levi(group, "siegel"):
            sigma = self.sc.build(labels, "GL2")
            return InducedRep(group=group, levi=levi, sigma=sigma, beta=beta, chi=char(self.chi))
        rho = self.sc.build(labels, "GSp2" if group == "GSp4" else "Sp2")
        return InducedRep(group=group, levi=levi, chi=char(self.chi), rho=rho)


def reduce_report(req: ReduceRequest, labels: LabelGroup) -> ReducibilityReport:
    return decide_reducibility(req.build(labels))


# ----------------------- fdeg -----------------------
def fdeg_report(group: str, rep: str, q0: Optional[int]) -> FdegReport:
    x = formal_degree(group, rep)
    return FdegReport(
        group=group,
        rep=rep,
        name=representation_name(group, rep),
        fdeg=x.render(),
        factored=factor(x).pretty(),
        value=evaluate(x, q0),
    )


def positive_depth_report(group: str, data: Any, q0: Optional[int]) -> FdegReport:
    if not isinstance(data, dict):
        raise MalformedDescriptor("a cuspidal datum must be a JSON object")
    try:
        datum = CuspidalDatumSummary(
            dim_rho=QHalf.parse(str(data["dim_rho"])),
            index=QHalf.parse(str(data["index"])),
            dim_g=int(data["dim_g"]),
            dim_g0=int(data["dim_g0"]),
            depths=tuple(Fraction(str(r)) for r in data["depths"]),
            root_counts=tuple(int(n) for n in data["root_counts"]),
        )
    except KeyError as exc:
        raise MalformedDescriptor(f"cuspidal datum lacks field {exc.args[0]!r}") from exc
    except (TypeError, ValueError) as exc:
        raise MalformedDescriptor(f"malformed cuspidal datum: {exc}") from exc
    degree = formal_degree_positive_depth(datum)
    value = degree.value
    return FdegReport(
        group=check_group(group),
        rep="positive_depth",
        fdeg=value.render() if value is not None else degree.render(),
        factored=factor(value).pretty() if value is not None else None,
        exponent=str(degree.exponent),
        value=evaluate(value, q0) if value is not None else None,
    )


# ----------------------- stability -----------------------
def candidates_from(data: Any) -> list[StabilityCandidate]:
    items = data.get("candidates") if isinstance(data, dict) else data
    if not isinstance(items, list):
        raise MalformedDescriptor("candidates must be a JSON list")
    out = []
    for item in items:
        if isinstance(item, str):
            item = {"label": item}
        if not isinstance(item, dict) or "label" not in item:
            raise MalformedDescriptor(f"malformed candidate: {item!r}")
        try:
            out.append(StabilityCandidate.model_validate(item))
        except ValidationError as exc:
            raise MalformedDescriptor(f"malformed candidate {item.get('label')!r}: {exc.errors()[0].get('msg')}") from exc
    return out


def named_candidates(name: str) -> list[StabilityCandidate]:
    if name not in CANDIDATE_SETS:
        raise InvalidOperand(f"unknown candidate set {name!r} (known: {', '.join(CANDIDATE_SETS)})")
    return CANDIDATE_SETS[name]()


# ----------------------- Utmatning -----------------------
def dump_json(report: BaseModel) -> str:
    data = report.model_dump(mode="json", by_alias=True, exclude_none=True)
    return orjson.dumps(data, option=orjson.OPT_SORT_KEYS | orjson.OPT_INDENT_2).decode()


def _cell(v: Any) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "yes" if v else "no"
    if isinstance(v, (list, tuple)):
        return ", ".join(_cell(x) for x in v)
    if isinstance(v, dict):
        return orjson.dumps(v, option=orjson.OPT_SORT_KEYS).decode()
    return str(v)


def render_rows(rows: list[dict[str, Any]]) -> str:
    """Justerad tabell; kolumnerna i den ordning de först förekommer."""
    if not rows:
        return "(empty)"
    cols: list[str] = []
    for r in rows:
        cols.extend(k for k in r if k not in cols)
    cells = [[_cell(r.get(c)) for c in cols] for r in rows]
    widths = [max(len(c), *(len(row[i]) for row in cells)) for i, c in enumerate(cols)]
    lines = ["  ".join(c.ljust(w) for c, w in zip(cols, widths)).rstrip()]
    lines.append("  ".join("-" * w for w in widths))
    lines.extend("  ".join(x.ljust(w) for x, w in zip(row, widths)).rstrip() for row in cells)
    return "\n".join(lines)


def render_table(report: BaseModel) -> str:
    data = report.model_dump(mode="json", by_alias=True, exclude_none=True)
    head, sections = [], []
    for key in sorted(data):
        value = data[key]
        if isinstance(value, list) and value and all(isinstance(v, dict) for v in value):
            sections.append(f"[{key}]\n{render_rows(value)}")
        elif isinstance(value, dict) and value and all(not isinstance(v, (dict, list)) for v in value.values()):
            sections.append(f"[{key}]\n{render_rows([{'key': k, 'value': v} for k, v in value.items()])}")
        elif isinstance(value, dict) and value:
            sections.append(f"[{key}]\n{render_table_dict(value)}")
        else:
            head.append({"field": key, "value": _cell(value)})
    return "\n\n".join([render_rows(head), *sections]) if head else "\n\n".join(sections)


def render_table_dict(data: dict[str, Any]) -> str:
    rows = []
    for key in sorted(data):
        value = data[key]
        if isinstance(value, list) and value and all(isinstance(v, dict) for v in value):
            rows.append(f"{key}:\n{render_rows(value)}")
        else:
            rows.append(f"{key}: {_cell(value)}")
    return "\n".join(rows)


def emit(report: BaseModel, cfg: SessionConfig) -> None:
    print(dump_json(report) if cfg.output_format == "json" else render_table(report))


# ----------------------- Underkommandon -----------------------
def cmd_tables(cfg: SessionConfig, args: argparse.Namespace) -> BaseModel:
    sections = [s for s in TABLE_SECTIONS if getattr(args, s)]
    return build_tables(cfg.group or "Sp4", sections, cfg.q0)


def cmd_classify(cfg: SessionConfig, args: argparse.Namespace) -> BaseModel:
    data = read_json(args.descriptor) if args.descriptor else None
    return classify_report(load_descriptor(args.preset, data, cfg.group), cfg.labels)


def cmd_packet(cfg: SessionConfig, args: argparse.Namespace) -> BaseModel:
    data = read_json(args.descriptor) if args.descriptor else None
    desc = load_descriptor(args.preset, data, cfg.group)
    if args.support:
        return cuspidal_support(desc, args.support, cfg.labels)
    packet = assemble_packet(desc, cfg.labels)
    if args.restrict:
        return restriction_report(packet)
    return packet


def cmd_reduce(cfg: SessionConfig, args: argparse.Namespace) -> BaseModel:
    sc = None
    if args.sc:
        sc = SupercuspidalSpec(
            ref=args.sc,
            group=args.sc_group,
            central_char=args.sc_central,
            self_dual=args.sc_self_dual,
            fsigma_trivial=_split(args.sc_fsigma_trivial),
            self_twists=_split(args.sc_self_twists),
        )
    req = ReduceRequest(
        group=cfg.group or "GSp4",
        levi=args.levi,
        chi1=args.chi1,
        chi2=args.chi2,
        theta=args.theta,
        beta=args.beta,
        chi=args.chi,
        sc=sc,
    )
    return reduce_report(req, cfg.labels)


def cmd_fdeg(cfg: SessionConfig, args: argparse.Namespace) -> BaseModel:
    group = cfg.group or "GSp4"
    if args.datum:
        return positive_depth_report(group, read_json(args.datum), cfg.q0)
    if not args.rep:
        raise InvalidOperand("fdeg needs --rep or --datum")
    return fdeg_report(group, args.rep, cfg.q0)


def cmd_stability(cfg: SessionConfig, args: argparse.Namespace) -> BaseModel:
    if args.candidates:
        candidates = candidates_from(read_json(args.candidates))
    else:
        candidates = named_candidates(args.set)
    return stability_report(candidates, args.near, args.convention or cfg.convention, args.q_mod_4)


def cmd_selfcheck(cfg: SessionConfig, args: argparse.Namespace) -> BaseModel:
    return run_selfcheck(args.module)


def _split(text: Optional[str]) -> list[str]:
    return [p.strip() for p in (text or "").split(",") if p.strip()]


COMMANDS: dict[str, Callable[[SessionConfig, argparse.Namespace], BaseModel]] = {
    "tables": cmd_tables,
    "classify": cmd_classify,
    "packet": cmd_packet,
    "reduce": cmd_reduce,
    "fdeg": cmd_fdeg,
    "stability": cmd_stability,
    "selfcheck": cmd_selfcheck,
}


# ----------------------- Argument -----------------------
def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--labels", default=None, help='Etikettdeklarationer, t.ex. "zeta:6,xi:generic".')
    common.add_argument("--format", choices=OUTPUT_FORMATS, default=None, help="Utmatningsformat.")
    common.add_argument("--q0", type=int, default=None, help="Utvärderingspunkt för q.")

    parser = argparse.ArgumentParser(prog="llc", description="Explicit lokal Langlandskorrespondens för Sp4 och GSp4.")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")

    p = sub.add_parser("tables", parents=[common], help="Rotdatum, Weylklasser, banor och kvoter.")
    p.add_argument("--group", choices=GROUPS, default="Sp4")
    for section in TABLE_SECTIONS:
        p.add_argument(f"--{section.replace('_', '-')}", dest=section, action="store_true")

    for name, text in (("classify", "Centralisator och L-paket."), ("packet", "L-paket med stöd och restriktion.")):
        p = sub.add_parser(name, parents=[common], help=text)
        p.add_argument("--group", choices=GROUPS, default=None)
        src = p.add_mutually_exclusive_group(required=True)
        src.add_argument("--descriptor", help="Parameterbeskrivning som JSON-fil.")
        src.add_argument("--preset", help="Namngiven förinställning, t.ex. sp4-case-7biii-eta.")
        if name == "packet":
            p.add_argument("--support", default=None, help="Förstärkning vars kuspidala stöd ska beräknas.")
            p.add_argument("--restrict", action="store_true", help="Restriktion av ett GSp4-paket till Sp4.")

    p = sub.add_parser("reduce", parents=[common], help="Reducerbarhet för parabolisk induktion.")
    p.add_argument("--group", choices=GROUPS, default="GSp4")
    p.add_argument("--levi", default="T", help="T, siegel, klingen eller ett Levi-namn.")
    p.add_argument("--chi1")
    p.add_argument("--chi2")
    p.add_argument("--theta")
    p.add_argument("--beta", default="0")
    p.add_argument("--chi")
    p.add_argument("--sc", help="Referens för den superkuspidala faktorn.")
    p.add_argument("--sc-group")
    p.add_argument("--sc-central", default="1")
    p.add_argument("--sc-self-dual", action="store_true")
    p.add_argument("--sc-fsigma-trivial", help="Kommaseparerade karaktärer triviala på F_σ^×.")
    p.add_argument("--sc-self-twists", help="Kommaseparerade kvadratiska ξ med ξρ ≅ ρ.")

    p = sub.add_parser("fdeg", parents=[common], help="Formell grad.")
    p.add_argument("--group", choices=GROUPS, default="GSp4")
    p.add_argument("--rep", help="Nyckel, t.ex. pi_alpha_eta2 eller delta_eta2.")
    p.add_argument("--datum", help="Sammanfattning av ett kuspidalt datum av positivt djup (JSON).")

    p = sub.add_parser("stability", parents=[common], help="Minimala stabila delmängder.")
    src = p.add_mutually_exclusive_group()
    src.add_argument("--candidates", help="Kandidatlista som JSON-fil.")
    src.add_argument("--set", choices=sorted(CANDIDATE_SETS), default="gsp4")
    p.add_argument("--near", choices=("1", "s"), default="s")
    p.add_argument("--convention", choices=("plus_for_eta2", "minus_for_eta2"), default=None)
    p.add_argument("--q-mod-4", dest="q_mod_4", type=int, choices=(1, 3), default=1)

    p = sub.add_parser("selfcheck", parents=[common], help="Kör alla invarianter.")
    p.add_argument("--module", choices=sorted({m for m, _ in CHECKS.values()}), default=None)
    return parser


# ----------------------- Körning -----------------------
def run(argv: Optional[list[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    command = next((a for a in argv if not a.startswith("-")), None)
    if command is None and any(a in ("-h", "--help") for a in argv):
        build_parser().print_help()
        return EXIT_OK
    if command not in SUBCOMMANDS:
        print(f"llc: unknown subcommand {command!r} (choose from {', '.join(SUBCOMMANDS)})", file=sys.stderr)
        return EXIT_USAGE

    args = build_parser().parse_args(argv)
    try:
        cfg = SessionConfig.from_args(args)
        report = COMMANDS[args.command](cfg, args)
    except (MalformedDescriptor, InvalidOperand) as e:
        logger.error("%s failed: %s", args.command, e.message)
        print(orjson.dumps(e.to_dict()).decode(), file=sys.stderr)
        return EXIT_BAD_INPUT
    except LLCError as e:
        logger.error("%s failed: %s", args.command, e.message)
        print(orjson.dumps(e.to_dict()).decode(), file=sys.stderr)
        return EXIT_ERROR

    emit(report, cfg)
    logger.info("%s done", args.command)
    if isinstance(report, SelfCheckReport) and not report.ok:
        return EXIT_ERROR
    return EXIT_OK


def main() -> None:
    logging.basicConfig(level=settings.log_level)
    sys.exit(run())


if __name__ == "__main__":
    main()
