//! Every example runs to completion.

#[allow(dead_code)]
mod validate_system {
    include!("../examples/validate_system.rs");
}

#[allow(dead_code)]
mod factorial_ratios {
    include!("../examples/factorial_ratios.rs");
}

#[allow(dead_code)]
mod landau_cells {
    include!("../examples/landau_cells.rs");
}

#[allow(dead_code)]
mod polytope_criteria {
    include!("../examples/polytope_criteria.rs");
}

#[allow(dead_code)]
mod swap_construction {
    include!("../examples/swap_construction.rs");
}

#[allow(dead_code)]
mod mirror_maps {
    include!("../examples/mirror_maps.rs");
}

#[allow(dead_code)]
mod hypergeometric_checks {
    include!("../examples/hypergeometric_checks.rs");
}

#[allow(dead_code)]
mod certify_corpus {
    include!("../examples/certify_corpus.rs");
}

#[test]
fn example_validate_system() {
    validate_system::run_example().unwrap();
}

#[test]
fn example_factorial_ratios() {
    factorial_ratios::run_example().unwrap();
}

#[test]
fn example_landau_cells() {
    landau_cells::run_example().unwrap();
}

#[test]
fn example_polytope_criteria() {
    polytope_criteria::run_example().unwrap();
}

#[test]
fn example_swap_construction() {
    swap_construction::run_example().unwrap();
}

#[test]
fn example_mirror_maps() {
    mirror_maps::run_example().unwrap();
}

#[test]
fn example_hypergeometric_checks() {
    hypergeometric_checks::run_example().unwrap();
}

#[test]
fn example_certify_corpus() {
    certify_corpus::run_example().unwrap();
}
