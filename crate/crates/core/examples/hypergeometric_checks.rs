// F_{v0}(λ) and G_i(λ) as A-hypergeometric series: Euler and box operators,
// quasi-solutions F log λ_i + G_i, negative support, and the specialization
// back to F(t) and G(t).

use ratiocert::hypergeom::{
    box_check, build_f_v0, build_g_i, euler_check, lattice_element, minimal_negative_support_check,
    quasi_solution_check, v0, Specialize,
};
use ratiocert::series::{series_f, series_g_c};
use ratiocert::validate_system;

pub fn run_example() -> ratiocert::Result<()> {
    let sys = validate_system(&[vec![2]], &[vec![1], vec![1]])?;
    let f = build_f_v0(&sys, 6)?;
    print!("F_v0 by p:\n{}", f.to_canonical_text());
    println!("Euler: {:?}", euler_check(&f).map(|n| format!("{n} monomials")));
    for p in [[1], [2], [-1]] {
        let v = box_check(&f, &lattice_element(f.config(), &p));
        println!("box l({p:?}): passed={} checked={} skipped={}", v.passed, v.checked, v.boundary_skipped);
    }
    for i in 2..=4 {
        let q = quasi_solution_check(&sys, i, 6)?;
        println!("F log λ_{i} + G_{i}: passed={} ({} identities)", q.passed, q.boxes.checked);
    }
    let support = minimal_negative_support_check(f.config(), &v0(f.config()), 6, None)?;
    println!("v0 has minimal negative support within ±6: {}", support.minimal_within_box);

    println!("specialize(F_v0) == F: {}", f.specialize()? == series_f(&sys, 6));
    let g = build_g_i(&sys, 2, 6)?.specialize()?;
    println!("specialize(G_2) == -G_C1: {}", g == series_g_c(&sys, 1, 6)?.neg());
    Ok(())
}

fn main() -> ratiocert::Result<()> {
    run_example()
}
