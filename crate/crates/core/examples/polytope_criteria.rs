// The lattice-point side: the configuration A, facets of its cone, interior
// lattice points of dilates, and how they line up with Φ.

use ratiocert::geometry::{dilate_summary, lattice_points_in_dilate, ConeGeometry};
use ratiocert::{min_phi, validate_system};

pub fn run_example() -> ratiocert::Result<()> {
    let sys = validate_system(&[vec![2]], &[vec![1], vec![1]])?;
    let geom = ConeGeometry::of_system(&sys)?;
    for (i, a) in geom.config.points().iter().enumerate() {
        println!("a_{} = {a:?}", i + 1);
    }
    println!("{} facets", geom.facets.len());
    for h in &geom.facets.normals {
        println!("  {h:?}");
    }
    for z in 0..=3 {
        let pts = lattice_points_in_dilate(&geom, z, true);
        let us: Vec<_> = pts.iter().map(|p| p.u.clone()).collect();
        println!("interior of {z}Δ(A): {us:?}");
    }

    for (c, d) in [
        (vec![vec![2]], vec![vec![1], vec![1]]),
        (vec![vec![1], vec![1]], vec![vec![2]]),
        (vec![vec![1, 1]], vec![vec![1, 0], vec![0, 1]]),
        (vec![vec![2, 1], vec![1, 2]], vec![vec![1, 0], vec![0, 1], vec![1, 1], vec![1, 1]]),
    ] {
        let sys = validate_system(&c, &d)?;
        let s = dilate_summary(&ConeGeometry::of_system(&sys)?);
        let level = (sys.j_count() + sys.r()) as i64;
        let phi = min_phi(&sys);
        println!(
            "C={c:?} D={d:?}: hollow {} unique {} min Σu {:?} = {} + {}",
            s.hollow_landau_dilate, s.unique_interior_point, s.min_interior_sum, level, phi.min_value
        );
        assert_eq!(s.min_interior_sum, Some(level + phi.min_value));
        assert_eq!(s.hollow_landau_dilate, phi.landau_holds());
    }
    Ok(())
}

fn main() -> ratiocert::Result<()> {
    run_example()
}
