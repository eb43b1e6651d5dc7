//! The XOR families U(r, n) on n = 2^m - 1 points: their sizes from the
//! recursion, the lower bound 2^|U| on paving matroids, and completions.
//!
//! cargo run --release --example paving_bound -- 15

use matroid_census::paving::{complete_to_paving, u_set, u_size_recursive};

fn main() -> matroid_census::Result<()> {
    let n: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(15);
    println!("r,u_size,lower_bound");
    for r in 3..=n {
        let u = u_size_recursive(r, n)?;
        println!("{r},{u},2^{u}");
    }

    // On 7 points U(3, 7) is the set of Fano lines; every subset completes to
    // a different rank-3 paving matroid.
    let lines = u_set(3, 7)?;
    let all = complete_to_paving(lines.members(), 3, 7)?;
    println!(
        "\nall 7 lines dependent: {} bases (the Fano plane has 28)",
        all.bases().len()
    );
    let none = complete_to_paving(&[], 3, 7)?;
    println!("no lines dependent: {} bases (U(3,7))", none.bases().len());
    Ok(())
}
