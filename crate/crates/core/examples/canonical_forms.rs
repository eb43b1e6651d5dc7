//! Isomorphism classes via canonical forms: splits the simple rank-3
//! matroids on 6 elements into classes and checks each orbit size against
//! the automorphism group.
//!
//! cargo run --release --example canonical_forms

use std::collections::BTreeMap;

use matroid_census::bigcomb::factorial;
use matroid_census::enumerate::{automorphism_count_bruteforce, canonical_form, enumerate_matroids, EnumConfig};
use matroid_census::matroid::Matroid;

fn main() -> matroid_census::Result<()> {
    let n = 6;
    let mut classes: BTreeMap<_, Vec<Matroid>> = BTreeMap::new();
    for m in enumerate_matroids(n, 3, 2, &EnumConfig::default())? {
        classes.entry(canonical_form(&m)).or_default().push(m);
    }
    println!("{} classes", classes.len());
    for (form, members) in &classes {
        let rep = form.to_matroid();
        let aut = automorphism_count_bruteforce(&rep);
        // Orbit-stabilizer: |orbit| * |Aut| = n!.
        assert_eq!(factorial(n)?, (members.len() as u64 * aut).into());
        println!(
            "{:>4} labeled  |Aut| = {aut:>3}  {} bases",
            members.len(),
            rep.bases().len()
        );
    }
    println!(
        "Fano plane: |Aut| = {}",
        automorphism_count_bruteforce(&Matroid::fano())
    );
    Ok(())
}
