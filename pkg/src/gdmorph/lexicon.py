"""Searchable vocabulary and the all-forms recognition index.

A Vocabulary indexes entries by lemma under a folding policy (exact,
accent-insensitive, or accent- and case-insensitive), since real texts
mix mòr, mór and mor.  An AllFormsIndex expands every entry to its full
set of surface forms so that inflected words in running text can be
traced back to their lemma and grammatical form.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import orthography, rules, svf
from .orthography import EXACT, FOLD_ACCENTS, FOLD_ACCENTS_CASE, fold_key
from .rules import RuleSet
from .svf import Entry

FOLD_POLICIES = (EXACT, FOLD_ACCENTS, FOLD_ACCENTS_CASE)


class Vocabulary:
    """An ordered collection of entries indexed by folded lemma."""

    def __init__(self, entries, fold_policy: str = EXACT):
        if fold_policy not in FOLD_POLICIES:
            raise ValueError(f"unknown fold policy: {fold_policy!r}")
        self.entries: list[Entry] = list(entries)
        self.fold_policy = fold_policy
        self._index: dict[str, list[Entry]] = {}
        for entry in self.entries:
            key = fold_key(entry.lemma, fold_policy)
            self._index.setdefault(key, []).append(entry)

    @classmethod
    def from_svf_file(cls, path, fold_policy: str = EXACT):
        """Load a vocabulary file; returns (vocabulary, line errors)."""
        entries, errors = svf.load_vocabulary_file(path)
        return cls(entries, fold_policy=fold_policy), errors

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def lookup(self, word: str) -> list[Entry]:
        """All entries whose lemma equals the word under the policy."""
        key = fold_key(orthography.canonical(word), self.fold_policy)
        return list(self._index.get(key, []))

    @property
    def lemma_set(self) -> set[str]:
        return {entry.lemma for entry in self.entries}


@dataclass
class AllFormsIndex:
    """Surface form -> {(entry, form code)} over a whole vocabulary."""

    fold_policy: str = EXACT
    form_index: dict[str, set[tuple[Entry, str]]] = field(default_factory=dict)
    entries_per_pos: dict[str, int] = field(default_factory=dict)
    forms_per_pos: dict[str, int] = field(default_factory=dict)
    failures: list[tuple[str, str, str]] = field(default_factory=list)
    _folded: dict[str, set[str]] = field(default_factory=dict)

    @property
    def distinct_form_count(self) -> int:
        return len(self.form_index)

    def forms(self) -> set[str]:
        return set(self.form_index)


def build_all_forms(vocabulary: Vocabulary, ruleset: RuleSet) -> AllFormsIndex:
    """Expand every entry to its surface forms and index them.

    Expansion is best effort; forms that cannot be derived (unknown
    principal parts, uncovered irregulars) are recorded as failures
    rather than aborting the build.
    """
    index = AllFormsIndex(fold_policy=vocabulary.fold_policy)
    pos_forms: dict[str, set[str]] = {}
    for entry in vocabulary:
        index.entries_per_pos[entry.pos] = index.entries_per_pos.get(entry.pos, 0) + 1
        forms, failures = rules.derive_forms(entry, ruleset)
        for code, message in failures.items():
            index.failures.append((entry.lemma, code, message))
        for surface, codes in forms.items():
            for code in sorted(codes):
                index.form_index.setdefault(surface, set()).add((entry, code))
            pos_forms.setdefault(entry.pos, set()).add(surface)
    for pos, forms in pos_forms.items():
        index.forms_per_pos[pos] = len(forms)
    if vocabulary.fold_policy != EXACT:
        for surface in index.form_index:
            folded = fold_key(surface, vocabulary.fold_policy)
            index._folded.setdefault(folded, set()).add(surface)
    return index


def _exact_or_folded(index: AllFormsIndex, word: str) -> set[tuple[Entry, str]]:
    if word in index.form_index:
        return set(index.form_index[word])
    hits: set[tuple[Entry, str]] = set()
    if index.fold_policy != EXACT:
        for surface in index._folded.get(fold_key(word, index.fold_policy), ()):
            hits |= index.form_index[surface]
    return hits


def recognize(index: AllFormsIndex, word: str) -> list[tuple[Entry, str]]:
    """All (entry, form code) analyses of a word found in text.

    Tries the word as written, then with prothetic t-/n-/h-/dh'
    stripped, folding accents according to the index policy.  The result
    is naturally many-valued: one spelling can realize several forms.
    """
    query = orthography.canonical(word)
    hits = _exact_or_folded(index, query)
    if not hits:
        stripped = orthography.strip_prothesis(query)
        if stripped != query:
            hits = _exact_or_folded(index, stripped)
    return sorted(hits, key=_analysis_order)


def _analysis_order(analysis: tuple[Entry, str]) -> tuple:
    entry, code = analysis
    codes = rules.FORMS_BY_POS.get(entry.pos, ())
    rank = codes.index(code) if code in codes else len(codes)
    return (entry.lemma, entry.pos, rank, code)
