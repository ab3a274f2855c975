"""
Serialization of generating-function coefficients, path tables and log series.

Rational coefficients travel as {"num": str, "den": str}; exponents that are
halves in the diamond convention travel as {"twice": int}.
"""
import csv
import io
import json
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Tuple, Union

from pydantic import BaseModel

from dyckgen.algebra import LSeries, QLaurent
from dyckgen.constants import DOUBLE_STEP_DIAMOND, METHOD_CLUSTER_LOG, METHOD_ORACLE, STEP_PLAQUETTE, VERSION
from dyckgen.oracle import PathTable


class Coefficient(BaseModel):
    num: str
    den: str

    @classmethod
    def of(cls, value: Fraction) -> "Coefficient":
        value = Fraction(value)
        return cls(num=str(value.numerator), den=str(value.denominator))

    def value(self) -> Fraction:
        return Fraction(int(self.num), int(self.den))


class Half(BaseModel):
    twice: int


Exponent = Union[int, Half]


class Term(BaseModel):
    l: Exponent
    A: Exponent
    s: Optional[int] = None
    coeff: Coefficient


class LogTerm(BaseModel):
    a: int
    q: int
    coeff: Coefficient


UNBOUNDED = "inf"


class SpecEcho(BaseModel):
    k: Union[int, str] = UNBOUNDED
    m: Optional[int] = None
    n: Optional[int] = None
    max_len: Optional[int] = None
    a_max: Optional[int] = None
    touchdown: bool = False


class OutputRecord(BaseModel):
    spec: SpecEcho
    convention: str
    terms: List[Term] = []
    log_terms: Optional[List[LogTerm]] = None
    log_prefactor: Optional[Dict[str, Coefficient]] = None
    method: str
    version: str = VERSION


def halve(value: int) -> Exponent:
    return value // 2 if value % 2 == 0 else Half(twice=value)


def unhalve(value: Exponent) -> int:
    """Plaquette-convention integer from a diamond-convention exponent."""
    return value.twice if isinstance(value, Half) else 2 * value


def convert_exponents(l: int, A: int, convention: str) -> Tuple[Exponent, Exponent]:
    if convention == DOUBLE_STEP_DIAMOND:
        return halve(l), halve(A)
    if convention != STEP_PLAQUETTE:
        raise ValueError(f"Unknown convention {convention!r}")
    return l, A


def _terms(rows: Iterable[Tuple[int, int, Optional[int], Fraction]], convention: str) -> List[Term]:
    out = []
    for l, A, s, coeff in rows:
        l_out, A_out = convert_exponents(l, A, convention)
        out.append(Term(l=l_out, A=A_out, s=s, coeff=Coefficient.of(coeff)))
    return out


def record_from_series(spec: SpecEcho, series: LSeries, convention: str, method: str) -> OutputRecord:
    return OutputRecord(spec=spec, convention=convention, terms=_terms(series.terms(), convention), method=method)


def record_from_table(table: PathTable, convention: str, touchdowns: bool) -> OutputRecord:
    """
    JSON keeps the full (l, A, s) split so the table can be rebuilt; `touchdowns`
    only decides whether the CSV view shows s or sums over it.
    """
    spec = SpecEcho(k=UNBOUNDED if table.k is None else table.k, m=table.m, n=table.n, max_len=table.l_max, touchdown=touchdowns)
    rows = [(l, A, s, Fraction(c)) for l, A, s, c in table.rows(touchdowns=True)]
    return OutputRecord(spec=spec, convention=convention, terms=_terms(rows, convention), method=METHOD_ORACLE)


def record_from_log(spec: SpecEcho, polys: List[QLaurent], log_prefactor: Optional[Tuple[Fraction, Fraction]] = None) -> OutputRecord:
    """p-polynomials as (a, q exponent, coefficient) terms, always in diamond units."""
    terms = [
        LogTerm(a=a, q=e, coeff=Coefficient.of(c))
        for a, poly in enumerate(polys, start=1) for e, c in poly.items()
    ]
    prefactor = None
    if log_prefactor is not None:
        prefactor = {"ln_z": Coefficient.of(log_prefactor[0]), "ln_q": Coefficient.of(log_prefactor[1])}
    return OutputRecord(spec=spec, convention=DOUBLE_STEP_DIAMOND, log_terms=terms, log_prefactor=prefactor,
                        method=METHOD_CLUSTER_LOG)


def to_json(record: OutputRecord) -> str:
    return json.dumps(record.dict(exclude_none=True), indent=4)


def from_json(text: str) -> OutputRecord:
    return OutputRecord.parse_obj(json.loads(text))


def _csv_exponent(value: Exponent) -> str:
    return f"{value.twice}/2" if isinstance(value, Half) else str(value)


def to_csv(record: OutputRecord) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    if record.log_terms is not None:
        writer.writerow(["a", "q", "num", "den"])
        for term in record.log_terms:
            writer.writerow([term.a, term.q, term.coeff.num, term.coeff.den])
        return buffer.getvalue()
    with_s = record.spec.touchdown
    writer.writerow(["l", "A", "s", "count"] if with_s else ["l", "A", "count"])
    rows: List[list] = []
    for term in record.terms:
        key = [_csv_exponent(term.l), _csv_exponent(term.A)]
        if with_s:
            key.append(term.s if term.s is not None else 0)
        # terms arrive sorted by (l, A, s); without the s column equal (l, A) rows are summed
        if rows and rows[-1][0] == key:
            rows[-1][1] += term.coeff.value()
        else:
            rows.append([key, term.coeff.value()])
    for key, total in rows:
        writer.writerow(key + [str(total)])
    return buffer.getvalue()


def table_from_record(record: OutputRecord) -> PathTable:
    """Rebuild the PathTable a `table` record was produced from."""
    spec = record.spec
    assert spec.m is not None and spec.n is not None and spec.max_len is not None, "Record does not carry a table spec"
    rows = []
    for term in record.terms:
        l, A = term.l, term.A
        if record.convention == DOUBLE_STEP_DIAMOND:
            l, A = unhalve(l), unhalve(A)
        count = term.coeff.value()
        assert count.denominator == 1, f"Path counts are integers, got {count}"
        if term.s is None:
            raise ValueError(f"Table term at l={term.l}, A={term.A} carries no touchdown count s")
        rows.append((l, A, term.s, int(count)))
    return PathTable.from_terms(None if spec.k == UNBOUNDED else spec.k, spec.m, spec.n, spec.max_len, rows)
