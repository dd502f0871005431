"""DIMACS import and export, handy for feeding an encoding to an external solver while debugging."""

from logiparam.exceptions import LogiParamError
from logiparam.sat.cnf import CNF


def to_dimacs(cnf, comments=True):
    lines = []
    if comments:
        for var in sorted(cnf.names):
            lines.append(f"c {var} {cnf.names[var]}")
    lines.append(f"p cnf {cnf.num_vars} {len(cnf.clauses)}")
    for clause in cnf.clauses:
        lines.append(" ".join(str(lit) for lit in clause) + " 0")
    return "\n".join(lines) + "\n"


def parse_dimacs(text):
    """Parse DIMACS text. Clauses may span lines; each ends with ``0``.

    Raises:
        LogiParamError: on a missing or malformed header, bad literals or a clause count mismatch
    """
    header = None
    clauses = []
    current = []
    for number, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith(("c", "%")):
            continue
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise LogiParamError(f"line {number}: malformed header '{line}'")
            try:
                header = (int(parts[2]), int(parts[3]))
            except ValueError:
                raise LogiParamError(f"line {number}: malformed header '{line}'")
            continue
        if header is None:
            raise LogiParamError(f"line {number}: clause before 'p cnf' header")
        for token in line.split():
            try:
                lit = int(token)
            except ValueError:
                raise LogiParamError(f"line {number}: invalid literal '{token}'")
            if lit == 0:
                if current:
                    clauses.append(tuple(current))
                current = []
            else:
                current.append(lit)

    if header is None:
        raise LogiParamError("missing 'p cnf' header")
    if current:
        clauses.append(tuple(current))

    num_vars, num_clauses = header
    if len(clauses) != num_clauses:
        raise LogiParamError(f"header declares {num_clauses} clauses but found {len(clauses)}")
    try:
        return CNF(num_vars, clauses)
    except ValueError as err:
        raise LogiParamError(f"invalid clause set: {err}")
