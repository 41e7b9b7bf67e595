"""Execute a multi-hop join across databases and write the result as CSV.

The path found in demo 04 runs Doctors through Clinics (exact FK join)
and then across the database boundary into Hospital_Survey, where clinic
names only fuzzily match the survey's hospital names.  Fuzzy hops attach
a _fuzzy_score_<hop> column so every matched row shows its evidence.

Run 01_generate_catalog.py and 04_join_graph.py first.
"""

from pathlib import Path

from joinscout import (
    TableRef,
    execute_path,
    graph_from_json,
    load_catalog,
    shortest_path,
    write_csv,
)

HERE = Path(__file__).parent
CATALOG = HERE / "output" / "catalog" / "manifest.json"
GRAPH = HERE / "output" / "join_graph.json"
OUT = HERE / "output" / "doctors_with_survey.csv"


def main() -> None:
    catalog = load_catalog(CATALOG)
    graph = graph_from_json(GRAPH.read_text(encoding="utf-8"))
    path = shortest_path(
        graph,
        TableRef("hospital_db", "Doctors"),
        TableRef("public_info_db", "Hospital_Survey"),
    )
    result = execute_path(path, catalog)

    header = result.header()
    show = ["doctor_name", "clinic_name", "hospital_name", "satisfaction_score", "_fuzzy_score_2"]
    idx = [header.index(name) for name in show]
    widths = [22, 24, 26, 18, 14]

    print(f"{result.row_count} joined rows; a sample:\n")
    print("  ".join(f"{name:<{w}}" for name, w in zip(show, widths)))
    for row in result.rows[:8]:
        print("  ".join(f"{row[i]:<{w}}" for i, w in zip(idx, widths)))

    exact = sum(1 for row in result.rows if row[idx[-1]] == "1.000")
    print(f"\n{exact} rows matched exactly, {result.row_count - exact} fuzzily.")

    written = write_csv(result, OUT)
    print(f"wrote {written} rows to {OUT.relative_to(HERE)}")


if __name__ == "__main__":
    main()
