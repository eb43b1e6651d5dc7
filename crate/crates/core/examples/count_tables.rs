//! Builds the count tables up to `n` (default 6) and checks them against the
//! published values.
//!
//! cargo run --release --example count_tables -- 7

use matroid_census::enumerate::{build_tables, cross_validate, EnumConfig, TableKind};

fn main() -> matroid_census::Result<()> {
    let max_n: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(6);
    let table = build_tables(max_n, &EnumConfig::default())?;
    println!("{}", table.to_markdown_table(TableKind::AllLabeled));
    println!("{}", table.to_markdown_table(TableKind::PavingNoniso));

    let mismatches = table.mismatches(max_n);
    println!("cells differing from the published tables: {}", mismatches.len());
    for m in &mismatches {
        println!("  {m}");
    }
    let report = cross_validate(&table);
    println!(
        "relation checks: {} passed of {}",
        report.checks.len() - report.failures().count(),
        report.checks.len()
    );
    Ok(())
}
