"""CSV (RFC 4180) and JSON writers for command output."""

import csv
import sys
from contextlib import contextmanager
from typing import IO, Iterable, Iterator, List, Optional, Sequence

from pydantic import BaseModel

from src.algebra.cosh_basis import CoshPoly
from src.schemas import CoshTerms, SeriesRow
from src.series.operator_series import OperatorSeries


@contextmanager
def open_output(path: Optional[str]) -> Iterator[IO[str]]:
    """Named UTF-8 file, or stdout when path is None or '-'."""
    if path is None or path == "-":
        yield sys.stdout
        return
    with open(path, "w", encoding="utf-8", newline="") as handle:
        yield handle


def write_csv(path: Optional[str], header: Sequence[str], rows: Iterable[Sequence]) -> None:
    with open_output(path) as handle:
        writer = csv.writer(handle)
        writer.writerow(header)
        writer.writerows(rows)


def write_json(model: BaseModel, path: Optional[str] = None) -> None:
    with open_output(path) as handle:
        handle.write(model.model_dump_json(indent=2))
        handle.write("\n")


def cosh_terms(p: CoshPoly) -> CoshTerms:
    return CoshTerms(**p.to_jsonable())


def describe(p: CoshPoly) -> str:
    """Human form, highest frequency first: '2 cosh(2x) + 1'."""
    if p.is_zero():
        return "0"
    parts = []
    for k, c in reversed(p.items()):
        body = "" if k == 0 else ("cosh(x)" if k == 1 else f"cosh({k}x)")
        magnitude = abs(c)
        if body and magnitude == 1:
            text = body
        elif body:
            text = f"{magnitude} {body}"
        else:
            text = str(magnitude)
        parts.append(("- " if c < 0 else "+ ") + text)
    first = parts[0]
    parts[0] = first[2:] if first.startswith("+") else "-" + first[2:]
    return " ".join(parts)


def series_rows(S1: OperatorSeries, S2: OperatorSeries) -> List[SeriesRow]:
    mode = S1.mode
    return [
        SeriesRow(power=2 * j, L1_coeff=mode.format(u), L2_coeff=mode.format(v))
        for j, (u, v) in enumerate(zip(S1.sigma, S2.sigma))
    ]
