//! Free erections and the full erection lists of a few rank-3 matroids,
//! with the plane counts that the free erection dominates.
//!
//! cargo run --example erections

use matroid_census::erection::{erections, free_erection, FreeErection};
use matroid_census::matroid::Matroid;

fn report(name: &str, m: &Matroid) {
    let ups = erections(m);
    match free_erection(m) {
        FreeErection::Trivial => println!("{name}: free erection is trivial, {} erections", ups.len()),
        FreeErection::Erected(f) => {
            let free_planes = f.flats_of_rank(3).len();
            let max_planes = ups.iter().map(|u| u.flats_of_rank(3).len()).max().unwrap_or(0);
            println!(
                "{name}: {} erections, free erection has {free_planes} planes, the most any erection has is {max_planes}",
                ups.len()
            );
        }
    }
}

fn main() -> matroid_census::Result<()> {
    report("U(3,5)", &Matroid::uniform(3, 5));
    report("U(3,6)", &Matroid::uniform(3, 6));
    report("Fano plane", &Matroid::fano());
    // Truncating the free matroid on 6 elements and erecting it back.
    report("T3(free 6)", &Matroid::free(6).truncate(3)?);
    Ok(())
}
