"""
Output plumbing shared by the subcommands: records go to stdout or --out,
never to the log stream.
"""

import sys
from contextlib import contextmanager
from pathlib import Path
from typing import Iterator, Optional, TextIO

from pydantic import ValidationError

from src.core.exceptions import InvalidParamsError, OutputPathError
from src.schemas.params import HamiltonianParams


@contextmanager
def open_output(path: Optional[str | Path]) -> Iterator[TextIO]:
    """
    Yield a text stream for path, or stdout when path is None.

    Raises:
        OutputPathError: the file cannot be opened for writing
    """
    if path is None:
        yield sys.stdout
        return
    try:
        stream = open(path, "w", newline="", encoding="utf-8")
    except OSError as e:
        raise OutputPathError(str(path), e.strerror or str(e)) from e
    with stream:
        yield stream


def write_text(text: str, path: Optional[str | Path]) -> None:
    with open_output(path) as stream:
        stream.write(text)


def build_params(tau: float, eps: float, u: float, n_atoms: int) -> HamiltonianParams:
    """
    Validate flag values into HamiltonianParams.

    Raises:
        InvalidParamsError: non-finite or negative values
    """
    try:
        return HamiltonianParams(tau=tau, eps=eps, u=u, n_atoms=n_atoms)
    except ValidationError as e:
        raise InvalidParamsError("Invalid model parameters", details={"errors": e.errors(include_url=False)}) from None
