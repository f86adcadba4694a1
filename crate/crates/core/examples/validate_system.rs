// Validating linear-form systems. Every violated hypothesis is reported at
// once, not just the first.

use ratiocert::{validate_system, Error};

pub fn run_example() -> ratiocert::Result<()> {
    // (2x)! / (x! x!)
    let sys = validate_system(&[vec![2]], &[vec![1], vec![1]])?;
    println!("valid: r={} J={} K={}", sys.r(), sys.j_count(), sys.k_count());

    let cases: [(&str, Vec<Vec<i64>>, Vec<Vec<i64>>); 3] = [
        ("duplicate", vec![vec![1]], vec![vec![1]]),
        ("unused x2", vec![vec![2, 0]], vec![vec![1, 0], vec![1, 0]]),
        ("several", vec![vec![3, 0]], vec![vec![1, 0], vec![0, 0]]),
    ];
    for (name, c, d) in cases {
        match validate_system(&c, &d) {
            Err(Error::Invalid(violations)) => {
                println!("{name}:");
                for v in violations {
                    println!("  {v}");
                }
            }
            other => panic!("{name} should be rejected, got {other:?}"),
        }
    }
    Ok(())
}

fn main() -> ratiocert::Result<()> {
    run_example()
}
