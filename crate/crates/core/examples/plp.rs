//! The points-lines-planes inequality over every simple rank-4 matroid on
//! up to 7 elements, plus a single evaluation shown in full.
//!
//! cargo run --release --example plp

use matroid_census::analysis::{plp_evaluate, plp_scan};
use matroid_census::enumerate::EnumConfig;
use matroid_census::matroid::{k_subsets, Matroid, SubsetWord};

fn main() -> matroid_census::Result<()> {
    let plane = SubsetWord::from_elements([1, 2, 3, 4]);
    let one_plane = Matroid::new(6, k_subsets(6, 4).into_iter().filter(|&b| b != plane).collect())?;
    println!("one 4-point plane on 6 elements: {}", plp_evaluate(&one_plane)?);
    println!("U(4,6): {}", plp_evaluate(&Matroid::uniform(4, 6))?);

    let cfg = EnumConfig::default();
    for n in 4..=7 {
        println!("{}", plp_scan(n, &cfg)?);
    }
    Ok(())
}
