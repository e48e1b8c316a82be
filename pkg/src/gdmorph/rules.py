"""Declarative inflection rules and their evaluator.

A rule file is a small knowledge base mapping grammatical forms to
transformed principal parts, so linguists can adjust the morphology
without touching code:

    # feminine nouns
    * NOUN & F
    NS: NS; NP: NP; GS: GS; GP: H/NP
    DS: NS; DP: NP; VS: H/GS; VP: H/NP

The "*" line selects entries (part of speech, optionally gender, IRREG,
or LEMMA="word" for special cases).  Each TARGET: expression pair
defines one grammatical form.  An expression names a principal part
(LEMMA, NS, NP, GS, VN, CP), optionally suffixed with a harmony pair
(LEMMA+"aidh|idh") and wrapped in transforms applied right to left:
H/ lenites, DH/ applies the past-tense dh' prefix, SL/ slenderizes.
Alternative surface forms for one target are separated by "|" between
expressions.  Rules are tried in file order and the first rule that
matches the entry and defines the requested form wins, so more specific
rules belong first.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from importlib import resources

from . import orthography, svf
from .orthography import SuffixAlternation
from .svf import ADJ, NOUN, VERB, Entry

NOUN_FORMS = ("NS", "NP", "GS", "GP", "DS", "DP", "VS", "VP")
VERB_FORMS = (
    "VN",
    "PASTP",
    "PAST_IND",
    "PAST_DEP",
    "FUT_IND",
    "FUT_DEP",
    "RELFUT",
    "COND1S_IND",
    "COND1P_IND",
    "COND23_IND",
    "COND1S_DEP",
    "COND1P_DEP",
    "COND23_DEP",
    "PAST_PASS",
    "FUT_PASS",
    "COND_PASS",
    "RELFUT_PASS",
    "IMP_PASS",
    "IMP1S",
    "IMP2S",
    "IMP3S",
    "IMP1P",
    "IMP2P",
    "IMP3P",
)
ADJ_FORMS = ("POS_ADJ", "CP", "POS_LENITED")

FORMS_BY_POS = {NOUN: NOUN_FORMS, VERB: VERB_FORMS, ADJ: ADJ_FORMS}

LEMMA = "LEMMA"
_SOURCES_BY_POS = {
    NOUN: (LEMMA, "NS", "NP", "GS"),
    VERB: (LEMMA, "VN"),
    ADJ: (LEMMA, "CP"),
}

_TRANSFORMS = {
    "H": orthography.lenite,
    "DH": orthography.glottal_past_prefix,
    "SL": orthography.slenderize,
}

DEFAULT_RULES_RESOURCE = "rules.grl"


class RuleError(Exception):
    """Base class for rule parsing and evaluation errors."""


class RuleSyntaxError(RuleError):
    """Malformed rule file (reported with a line number)."""


class UnknownFormCodeError(RuleError):
    """A form code that does not exist or is invalid for the entry."""


class TransformOnEmptySourceError(RuleSyntaxError):
    """A transform prefix with nothing to apply it to, e.g. "H/"."""


class NoRuleMatchesError(RuleError):
    """No rule in the set defines the requested form for the entry."""


class MissingPrincipalPartError(RuleError):
    """The derivation needs a principal part recorded as unknown."""


class IrregularUnsupportedError(RuleError):
    """Irregular entries inflect only through LEMMA= special-case rules."""


@dataclass(frozen=True)
class Derivation:
    """One way to realize a form: transforms over a (suffixed) source."""

    target: str
    source: str
    suffix: SuffixAlternation | None = None
    transforms: tuple[str, ...] = ()


@dataclass(frozen=True)
class Matcher:
    """Entry selector; every field that is set must match the entry."""

    pos: str
    gender: str | None = None
    irregular: bool | None = None
    lemma_is: str | None = None

    def matches(self, entry: Entry) -> bool:
        if entry.pos != self.pos:
            return False
        if self.gender is not None and entry.gender != self.gender:
            return False
        if self.irregular is not None and entry.irregular != self.irregular:
            return False
        if self.lemma_is is not None and entry.lemma != self.lemma_is:
            return False
        return True


@dataclass
class Rule:
    matcher: Matcher
    derivations: dict[str, tuple[Derivation, ...]] = field(default_factory=dict)


@dataclass
class RuleSet:
    """Ordered rules; first match wins, so specific rules come first."""

    rules: list[Rule] = field(default_factory=list)


def _strip_comment(line: str) -> str:
    # "#" cannot occur inside a Gaelic word or a suffix pair, so a plain
    # cut at the first "#" is safe even within quotes
    cut = line.find("#")
    return line if cut < 0 else line[:cut]


def _parse_matcher(text: str, number: int) -> Matcher:
    pos = None
    gender = None
    irregular = None
    lemma_is = None
    for raw in text.split("&"):
        pred = raw.strip()
        if not pred:
            raise RuleSyntaxError(f"line {number}: empty predicate")
        upper = pred.upper()
        if upper in svf.PARTS_OF_SPEECH:
            if pos is not None:
                raise RuleSyntaxError(f"line {number}: duplicate part of speech")
            pos = upper
        elif upper in svf.GENDERS:
            gender = upper
        elif upper == "IRREG":
            irregular = True
        elif upper.startswith("LEMMA"):
            _, _, value = pred.partition("=")
            value = value.strip()
            if not (len(value) >= 2 and value[0] == '"' and value[-1] == '"'):
                raise RuleSyntaxError(f'line {number}: LEMMA needs a quoted word')
            lemma_is = orthography.canonical(value[1:-1])
        else:
            raise RuleSyntaxError(f"line {number}: unknown predicate {pred!r}")
    if pos is None:
        raise RuleSyntaxError(f"line {number}: rule needs NOUN, VERB or ADJ")
    return Matcher(pos=pos, gender=gender, irregular=irregular, lemma_is=lemma_is)


def _split_outside_quotes(text: str, separator: str) -> list[str]:
    parts = []
    current = []
    in_quotes = False
    for ch in text:
        if ch == '"':
            in_quotes = not in_quotes
            current.append(ch)
        elif ch == separator and not in_quotes:
            parts.append("".join(current))
            current = []
        else:
            current.append(ch)
    parts.append("".join(current))
    return parts


def _parse_expression(text: str, target: str, pos: str, number: int) -> Derivation:
    expr = text.strip()
    if not expr:
        raise RuleSyntaxError(f"line {number}: empty expression for {target}")

    suffix = None
    head, plus, quoted = expr.partition("+")
    if plus:
        pair = quoted.strip()
        if not (len(pair) >= 2 and pair[0] == '"' and pair[-1] == '"'):
            raise RuleSyntaxError(
                f"line {number}: suffix for {target} must be quoted"
            )
        halves = pair[1:-1].split("|")
        if len(halves) != 2 or not halves[0] or not halves[1]:
            raise RuleSyntaxError(
                f'line {number}: suffix must be a "broad|slender" pair'
            )
        suffix = SuffixAlternation(halves[0], halves[1])
        expr = head.strip()

    pieces = [p.strip() for p in expr.split("/")]
    transforms = tuple(p.upper() for p in pieces[:-1])
    source = pieces[-1].upper()
    if not source:
        raise TransformOnEmptySourceError(
            f"line {number}: transform with no source in {text.strip()!r}"
        )
    for transform in transforms:
        if transform not in _TRANSFORMS:
            raise RuleSyntaxError(f"line {number}: unknown transform {transform!r}")
    if source == "NS" and pos == NOUN:
        source = LEMMA
    if source not in _SOURCES_BY_POS[pos]:
        raise RuleSyntaxError(
            f"line {number}: source {source!r} is not available for {pos}"
        )
    return Derivation(target=target, source=source, suffix=suffix, transforms=transforms)


def parse_rules(text: str) -> RuleSet:
    """Parse a rule file; raises RuleSyntaxError with a line number."""
    ruleset = RuleSet()
    current: Rule | None = None
    for number, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw).strip()
        if not line:
            continue
        if line.startswith("*"):
            current = Rule(matcher=_parse_matcher(line[1:], number))
            ruleset.rules.append(current)
            continue
        if current is None:
            raise RuleSyntaxError(f"line {number}: derivation before any * line")
        for chunk in _split_outside_quotes(line, ";"):
            chunk = chunk.strip()
            if not chunk:
                continue
            target_text, colon, expr_text = chunk.partition(":")
            if not colon:
                raise RuleSyntaxError(f"line {number}: expected TARGET: expression")
            target = target_text.strip().upper()
            pos = current.matcher.pos
            if target not in FORMS_BY_POS[pos]:
                if any(target in forms for forms in FORMS_BY_POS.values()):
                    raise UnknownFormCodeError(
                        f"line {number}: {target} is not a {pos} form"
                    )
                raise UnknownFormCodeError(f"line {number}: unknown form {target!r}")
            if target in current.derivations:
                raise RuleSyntaxError(
                    f"line {number}: duplicate target {target} in one rule"
                )
            alternatives = tuple(
                _parse_expression(alt, target, pos, number)
                for alt in _split_outside_quotes(expr_text, "|")
            )
            current.derivations[target] = alternatives
    return ruleset


def load_rules(path) -> RuleSet:
    with open(path, encoding="utf-8") as handle:
        return parse_rules(handle.read())


def default_rules() -> RuleSet:
    """The rule set shipped with the package."""
    text = (
        resources.files(__package__)
        .joinpath("data", DEFAULT_RULES_RESOURCE)
        .read_text(encoding="utf-8")
    )
    return parse_rules(text)


def _resolve_source(entry: Entry, source: str) -> str | None:
    """Principal-part text; None when the part is marked non-existent."""
    if source == LEMMA:
        return entry.lemma
    value = getattr(entry, source.lower(), None)
    if value is None:
        raise MissingPrincipalPartError(
            f"{entry.lemma}: entry has no {source} part"
        )
    if value.is_unknown:
        raise MissingPrincipalPartError(f"{entry.lemma}: {source} is unknown")
    if value.is_non_existent:
        return None
    return value.text


def _apply_derivation(entry: Entry, derivation: Derivation) -> str | None:
    base = _resolve_source(entry, derivation.source)
    if base is None:
        return None
    if derivation.suffix is not None:
        base = orthography.attach_suffix(base, derivation.suffix)
    for transform in reversed(derivation.transforms):
        base = _TRANSFORMS[transform](base)
    return base


def _candidate_rules(entry: Entry, ruleset: RuleSet) -> list[Rule]:
    if entry.irregular:
        return [
            rule
            for rule in ruleset.rules
            if rule.matcher.lemma_is is not None and rule.matcher.matches(entry)
        ]
    return [rule for rule in ruleset.rules if rule.matcher.matches(entry)]


def inflect(entry: Entry, form: str, ruleset: RuleSet) -> list[str]:
    """Surface forms for one grammatical form of the entry.

    A list, because a cell may hold alternative realizations; empty when
    the source principal part is marked non-existent.
    """
    if form not in FORMS_BY_POS.get(entry.pos, ()):
        raise UnknownFormCodeError(f"{form} is not a {entry.pos} form")
    candidates = _candidate_rules(entry, ruleset)
    if entry.irregular and not candidates:
        raise IrregularUnsupportedError(
            f"{entry.lemma} is irregular and no special-case rule covers it"
        )
    for rule in candidates:
        if form not in rule.derivations:
            continue
        variants = []
        for derivation in rule.derivations[form]:
            surface = _apply_derivation(entry, derivation)
            if surface is not None and surface not in variants:
                variants.append(surface)
        return variants
    if entry.irregular:
        raise IrregularUnsupportedError(
            f"{entry.lemma} is irregular and no special-case rule defines {form}"
        )
    raise NoRuleMatchesError(f"no rule defines {form} for {entry.lemma}")


@dataclass
class Paradigm:
    """Per-form results of declining or conjugating one entry."""

    pos: str
    cells: dict[str, list[str]] = field(default_factory=dict)
    errors: dict[str, str] = field(default_factory=dict)


def _fill_paradigm(entry: Entry, ruleset: RuleSet, forms: tuple[str, ...]) -> Paradigm:
    paradigm = Paradigm(pos=entry.pos)
    for form in forms:
        try:
            paradigm.cells[form] = inflect(entry, form, ruleset)
        except (RuleError, orthography.NotSlenderizableError,
                orthography.NoVowelError) as exc:
            paradigm.errors[form] = str(exc)
    return paradigm


def decline(entry: Entry, ruleset: RuleSet) -> Paradigm:
    """All eight noun case/number cells; failures reported per cell."""
    if entry.pos != NOUN:
        raise ValueError(f"decline needs a noun, got {entry.pos}")
    return _fill_paradigm(entry, ruleset, NOUN_FORMS)


def conjugate(entry: Entry, ruleset: RuleSet) -> Paradigm:
    """Every verb form cell; failures reported per cell."""
    if entry.pos != VERB:
        raise ValueError(f"conjugate needs a verb, got {entry.pos}")
    if entry.irregular and not _candidate_rules(entry, ruleset):
        raise IrregularUnsupportedError(
            f"{entry.lemma} is irregular and no special-case rule covers it"
        )
    return _fill_paradigm(entry, ruleset, VERB_FORMS)


def derive_forms(
    entry: Entry, ruleset: RuleSet
) -> tuple[dict[str, set[str]], dict[str, str]]:
    """Every producible surface form, mapped to the form codes it
    realizes, plus the per-code errors for forms that could not be
    derived.

    Best effort: the lemma is always included.  For nouns, the lenited
    allomorph of each form is added too (mo chat, mo shaoghal), tagged
    with the codes of the form it varies, unless that spelling is
    already a form in its own right.
    """
    forms: dict[str, set[str]] = {}
    failures: dict[str, str] = {}
    for code in FORMS_BY_POS.get(entry.pos, ()):
        try:
            variants = inflect(entry, code, ruleset)
        except (RuleError, orthography.NotSlenderizableError,
                orthography.NoVowelError) as exc:
            failures[code] = str(exc)
            continue
        for variant in variants:
            forms.setdefault(variant, set()).add(code)
    if entry.lemma not in forms:
        forms[entry.lemma] = {LEMMA}
    if entry.pos == NOUN:
        for surface, codes in list(forms.items()):
            lenited = orthography.lenite(surface)
            if lenited != surface and lenited not in forms:
                forms[lenited] = set(codes)
    return forms, failures


def surface_form_map(entry: Entry, ruleset: RuleSet) -> dict[str, set[str]]:
    """Surface form -> form codes for one entry (errors skipped)."""
    return derive_forms(entry, ruleset)[0]


def all_surface_forms(entry: Entry, ruleset: RuleSet) -> set[str]:
    """The distinct spellings under which the entry can appear in text."""
    return set(surface_form_map(entry, ruleset))
