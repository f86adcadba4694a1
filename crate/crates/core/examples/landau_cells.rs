// The step function Φ and the Landau and Delaygue criteria, decided by
// enumerating the half-open cells where every floor is constant.

use ratiocert::cells::{feasible_cells, grid_oracle_min_phi, min_phi};
use ratiocert::report::rat_text;
use ratiocert::validate_system;

pub fn run_example() -> ratiocert::Result<()> {
    let systems = [
        ("binomial", validate_system(&[vec![2]], &[vec![1], vec![1]])?),
        ("inverse", validate_system(&[vec![1], vec![1]], &[vec![2]])?),
        ("Chebyshev", validate_system(&[vec![30], vec![1]], &[vec![15], vec![10], vec![6]])?),
        ("two variables", validate_system(&[vec![1, 1]], &[vec![1, 0], vec![0, 1]])?),
    ];
    for (name, sys) in &systems {
        let phi = min_phi(sys);
        let point: Vec<String> = phi.witness_point.coords().iter().map(rat_text).collect();
        println!(
            "{name}: min Φ = {} at ({}), Landau {}, Φ ≥ 1 on D {}, {} cells",
            phi.min_value,
            point.join(", "),
            phi.landau_holds(),
            phi.phi_at_least_one_on_d(),
            phi.feasible_cell_count,
        );
        // a grid can only overestimate the minimum
        let q = u32::try_from(phi.witness_denominator()).unwrap_or(1);
        assert_eq!(grid_oracle_min_phi(sys, q)?, phi.min_value);
    }

    let (_, sys) = &systems[3];
    for cell in feasible_cells(sys) {
        println!("  floors C={:?} D={:?} Φ={}", cell.signature.m, cell.signature.n, cell.signature.value());
    }
    Ok(())
}

fn main() -> ratiocert::Result<()> {
    run_example()
}
