"""Data model, CSV ingestion, and aggregation for researcher publication data."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence, TextIO


class CorpusError(ValueError):
    """Raised for malformed input data or a violated corpus invariant."""


@dataclass(frozen=True)
class PaperRecord:
    """One publication: its citation count and its number of authors."""

    citations: int
    authors: int

    def __post_init__(self) -> None:
        if not isinstance(self.citations, int) or self.citations < 0:
            raise ValueError(
                f"citations must be a non-negative integer, got {self.citations!r}"
            )
        if not isinstance(self.authors, int) or self.authors < 1:
            raise ValueError(
                f"authors must be a positive integer, got {self.authors!r}"
            )


@dataclass(frozen=True)
class ResearcherProfile:
    """A researcher's id, career length in years, and publication list."""

    id: str
    career_years: int
    papers: tuple[PaperRecord, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "papers", tuple(self.papers))
        if not isinstance(self.id, str) or not self.id:
            raise ValueError(f"id must be a non-empty string, got {self.id!r}")
        if not isinstance(self.career_years, int) or self.career_years < 1:
            raise ValueError(
                f"career_years must be a positive integer, got {self.career_years!r}"
            )
        for record in self.papers:
            if not isinstance(record, PaperRecord):
                raise ValueError(f"papers must hold PaperRecord items, got {record!r}")


@dataclass(frozen=True)
class DmuAggregate:
    """Career totals for one researcher: years and coauthors in, citations out."""

    id: str
    years: int
    coauthors: int
    citations: int

    def __post_init__(self) -> None:
        if not isinstance(self.id, str) or not self.id:
            raise ValueError(f"id must be a non-empty string, got {self.id!r}")
        if not isinstance(self.years, int) or self.years < 1:
            raise ValueError(f"years must be a positive integer, got {self.years!r}")
        if not isinstance(self.coauthors, int) or self.coauthors < 1:
            raise ValueError(
                f"coauthors must be a positive integer, got {self.coauthors!r}"
            )
        if not isinstance(self.citations, int) or self.citations < 0:
            raise ValueError(
                f"citations must be a non-negative integer, got {self.citations!r}"
            )


def _read_text(source: str | TextIO) -> str:
    return source.read() if hasattr(source, "read") else source


def _data_lines(text: str) -> Iterator[tuple[int, str]]:
    """Yield (physical line number, stripped line), skipping blanks and comments."""
    for number, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        yield number, stripped


def _parse_rows(
    source: str | TextIO, columns: tuple[str, ...], name: str
) -> list[tuple[int, dict[str, str]]]:
    """Parse CSV rows into dicts keyed by the required column names.

    A header is recognized when the first data line's first cell is "id"
    (case-insensitive).  With a header, the required columns may appear in
    any position, extra columns are ignored, and each row must match the
    header width.  Without one, rows must hold exactly the required columns
    in their documented order.
    """
    lines = list(_data_lines(_read_text(source)))
    positions = {column: index for index, column in enumerate(columns)}
    width = len(columns)
    start = 0
    if lines:
        first = [cell.strip().lower() for cell in lines[0][1].split(",")]
        if first[0] == "id":
            missing = [column for column in columns if column not in first]
            if missing:
                raise CorpusError(
                    f"{name} line {lines[0][0]}: header is missing "
                    f"column(s) {', '.join(missing)}"
                )
            positions = {column: first.index(column) for column in columns}
            width = len(first)
            start = 1
    rows = []
    for number, line in lines[start:]:
        cells = [cell.strip() for cell in line.split(",")]
        if len(cells) != width:
            raise CorpusError(
                f"{name} line {number}: expected {width} columns, got {len(cells)}"
            )
        rows.append((number, {column: cells[positions[column]] for column in columns}))
    if not rows:
        raise CorpusError(f"{name}: no records")
    return rows


def _int_field(name: str, number: int, column: str, value: str) -> int:
    try:
        return int(value)
    except ValueError:
        raise CorpusError(
            f"{name} line {number}: non-integer value {value!r} for {column}"
        ) from None


def parse_papers(source: str | TextIO) -> dict[str, tuple[PaperRecord, ...]]:
    """Parse an ``id,citations,authors`` stream, grouping papers by researcher.

    Researchers appear in first-occurrence order; each researcher's papers
    keep their file order.
    """
    groups: dict[str, list[PaperRecord]] = {}
    for number, row in _parse_rows(source, ("id", "citations", "authors"), "papers"):
        try:
            record = PaperRecord(
                citations=_int_field("papers", number, "citations", row["citations"]),
                authors=_int_field("papers", number, "authors", row["authors"]),
            )
        except CorpusError:
            raise
        except ValueError as error:
            raise CorpusError(f"papers line {number}: {error}") from None
        groups.setdefault(row["id"], []).append(record)
    return {researcher: tuple(records) for researcher, records in groups.items()}


def parse_profiles(
    profiles_source: str | TextIO, papers_source: str | TextIO
) -> list[ResearcherProfile]:
    """Parse the two-file per-paper corpus into researcher profiles.

    ``profiles_source`` holds one ``id,career_years`` row per researcher;
    ``papers_source`` holds ``id,citations,authors`` rows in publication
    order.  Every paper row must name a researcher declared in the profiles
    stream.  Researchers with no paper rows are kept (they can be staged but
    not aggregated).
    """
    years: dict[str, int] = {}
    declared_at: dict[str, int] = {}
    for number, row in _parse_rows(profiles_source, ("id", "career_years"), "profiles"):
        researcher = row["id"]
        if researcher in years:
            raise CorpusError(
                f"profiles line {number}: duplicate researcher id {researcher!r}"
            )
        years[researcher] = _int_field(
            "profiles", number, "career_years", row["career_years"]
        )
        declared_at[researcher] = number
    papers: dict[str, list[PaperRecord]] = {researcher: [] for researcher in years}
    for number, row in _parse_rows(papers_source, ("id", "citations", "authors"), "papers"):
        researcher = row["id"]
        if researcher not in years:
            raise CorpusError(
                f"papers line {number}: unknown researcher id {researcher!r}"
            )
        try:
            record = PaperRecord(
                citations=_int_field("papers", number, "citations", row["citations"]),
                authors=_int_field("papers", number, "authors", row["authors"]),
            )
        except CorpusError:
            raise
        except ValueError as error:
            raise CorpusError(f"papers line {number}: {error}") from None
        papers[researcher].append(record)
    profiles = []
    for researcher, career_years in years.items():
        try:
            profiles.append(
                ResearcherProfile(
                    id=researcher,
                    career_years=career_years,
                    papers=tuple(papers[researcher]),
                )
            )
        except ValueError as error:
            raise CorpusError(
                f"profiles line {declared_at[researcher]}: {error}"
            ) from None
    return profiles


def parse_aggregates(source: str | TextIO) -> list[DmuAggregate]:
    """Parse an ``id,years,coauthors,citations`` stream into DMU aggregates."""
    aggregates = []
    seen: set[str] = set()
    for number, row in _parse_rows(
        source, ("id", "years", "coauthors", "citations"), "aggregates"
    ):
        researcher = row["id"]
        if researcher in seen:
            raise CorpusError(
                f"aggregates line {number}: duplicate researcher id {researcher!r}"
            )
        seen.add(researcher)
        try:
            aggregates.append(
                DmuAggregate(
                    id=researcher,
                    years=_int_field("aggregates", number, "years", row["years"]),
                    coauthors=_int_field(
                        "aggregates", number, "coauthors", row["coauthors"]
                    ),
                    citations=_int_field(
                        "aggregates", number, "citations", row["citations"]
                    ),
                )
            )
        except CorpusError:
            raise
        except ValueError as error:
            raise CorpusError(f"aggregates line {number}: {error}") from None
    return aggregates


def parse_h_values(source: str | TextIO) -> dict[str, int]:
    """Parse an ``id,h`` stream into a researcher-to-h mapping."""
    values: dict[str, int] = {}
    for number, row in _parse_rows(source, ("id", "h"), "h-values"):
        researcher = row["id"]
        if researcher in values:
            raise CorpusError(
                f"h-values line {number}: duplicate researcher id {researcher!r}"
            )
        value = _int_field("h-values", number, "h", row["h"])
        if value < 0:
            raise CorpusError(f"h-values line {number}: h must be non-negative")
        values[researcher] = value
    return values


def aggregate(profile: ResearcherProfile) -> DmuAggregate:
    """Collapse a profile into its (years, coauthors, citations) DMU triple."""
    if not profile.papers:
        raise CorpusError(f"researcher {profile.id!r} has no papers to aggregate")
    return DmuAggregate(
        id=profile.id,
        years=profile.career_years,
        coauthors=sum(record.authors for record in profile.papers),
        citations=sum(record.citations for record in profile.papers),
    )


def _serializable_id(researcher: str) -> str:
    # ids are written unquoted, so the delimiter set is off limits
    if "," in researcher or "\n" in researcher or researcher.startswith("#"):
        raise CorpusError(f"id {researcher!r} cannot be serialized without quoting")
    return researcher


def profiles_to_csv(profiles: Sequence[ResearcherProfile]) -> tuple[str, str]:
    """Serialize profiles to (profiles text, papers text), both with headers."""
    profile_lines = ["id,career_years"]
    paper_lines = ["id,citations,authors"]
    for profile in profiles:
        researcher = _serializable_id(profile.id)
        profile_lines.append(f"{researcher},{profile.career_years}")
        for record in profile.papers:
            paper_lines.append(f"{researcher},{record.citations},{record.authors}")
    return "\n".join(profile_lines) + "\n", "\n".join(paper_lines) + "\n"


def aggregates_to_csv(aggregates: Sequence[DmuAggregate]) -> str:
    """Serialize aggregates to CSV text with the standard header."""
    lines = ["id,years,coauthors,citations"]
    for item in aggregates:
        researcher = _serializable_id(item.id)
        lines.append(f"{researcher},{item.years},{item.coauthors},{item.citations}")
    return "\n".join(lines) + "\n"
