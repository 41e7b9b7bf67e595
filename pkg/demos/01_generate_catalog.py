"""Generate the synthetic multi-database benchmark catalog.

Four databases land on disk as plain CSV files plus a manifest: a hospital
system, an insurer, a pharmacy chain, and a public-information portal.
The public tables deliberately re-state values from the other databases
with noise injected (dropped characters, reordered names, synonym
spellings), and a ground-truth sidecar records every distortion so later
steps can be scored.
"""

from pathlib import Path

from joinscout import generate_catalog, load_ground_truth

OUT = Path(__file__).parent / "output" / "catalog"


def main() -> None:
    OUT.parent.mkdir(exist_ok=True)
    catalog = generate_catalog(OUT, seed=42)

    print(f"catalog written to {OUT}\n")
    for db in catalog.databases:
        print(f"{db.name}")
        for table in db.tables:
            fks = ", ".join(
                f"{'+'.join(fk.columns)} -> {fk.ref_table}" for fk in table.foreign_keys
            )
            note = f"  (fk: {fks})" if fks else ""
            print(f"  {table.name:<20} {table.row_count:>4} rows{note}")
        print()

    # The sidecar is what makes the catalog a benchmark rather than just
    # random data: it lists which values were distorted, and how.
    truth = load_ground_truth(OUT / "ground_truth.json")
    print(f"{len(truth['fuzzified'])} values were fuzzified, e.g.:")
    for entry in truth["fuzzified"][:5]:
        print(
            f"  {entry['original']!r} -> {entry['value']!r}"
            f"  [{entry['transform']}, {entry['table']}.{entry['column']}]"
        )
    print("\njoinable column pairs hidden in the data:")
    for pair in truth["joinable_pairs"]:
        l, r = pair["left"], pair["right"]
        print(
            f"  {l['db']}.{l['table']}.{l['column']}"
            f"  <->  {r['db']}.{r['table']}.{r['column']}"
        )


if __name__ == "__main__":
    main()
