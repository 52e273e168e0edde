"""Built-in truth tables shipped with the package."""
import pathlib

from qhc_gates.parsers import parse_truth_table

file_path = pathlib.Path(__file__).parent
builtin_tables = {
    "half-adder": file_path / "half_adder.json",
    "full-adder": file_path / "full_adder.json",
    # the in-text variant where (1,1,0) -> 11; no single cycle realizes it
    "full-adder-main-text": file_path / "full_adder_main_text.json",
}


def builtin_table_names():
    return list(builtin_tables)


def builtin_table(name):
    """Load a built-in table by name, e.g. ``builtin_table("half-adder")``."""
    try:
        path = builtin_tables[name]
    except KeyError as exception:
        raise KeyError(f"`{name}` is not a built-in table, choose one of {builtin_table_names()}") from exception
    return parse_truth_table(path.read_text(encoding="utf-8"))
