// Exchanging numerator and denominator. A unimodular map carries the
// configuration of a system onto that of its swap, so interior points
// correspond; and when K ≤ J some ratio must be non-integral.

use std::collections::BTreeSet;

use ratiocert::geometry::{
    denominator_count_check, denominator_side_point, lattice_points_in_dilate, swap_map, swap_system, ConeGeometry,
};
use ratiocert::validate_system;

pub fn run_example() -> ratiocert::Result<()> {
    let sys = validate_system(&[vec![2, 1], vec![1, 2]], &[vec![1, 0], vec![0, 1], vec![1, 1], vec![1, 1]])?;
    let swapped = swap_system(&sys)?;
    let (a, b) = (ConeGeometry::of_system(&sys)?, ConeGeometry::of_system(&swapped)?);

    for p in a.config.points() {
        println!("{p:?} -> {:?}", swap_map(&sys, p));
    }
    let z = 6;
    let ours: BTreeSet<_> = lattice_points_in_dilate(&a, z, true).into_iter().map(|p| swap_map(&sys, &p.u)).collect();
    let theirs: BTreeSet<_> = lattice_points_in_dilate(&b, z, true).into_iter().map(|p| p.u).collect();
    println!("interior points of {z}Δ: {} and {}, images agree: {}", ours.len(), theirs.len(), ours == theirs);

    let point = denominator_side_point(&b.config);
    println!("swapped system: interior point {point:?} of sum {}", point.iter().sum::<i64>());
    println!("{:?}", denominator_count_check(&swapped, 4, 64));
    Ok(())
}

fn main() -> ratiocert::Result<()> {
    run_example()
}
