//! Graded-lexicographic enumeration of nonnegative exponent vectors.

/// All vectors of length `r` with entries in `0..=per_var` (unbounded when
/// `None`) and total degree `degree`, in ascending lexicographic order.
pub(crate) fn of_degree(r: usize, degree: u64, per_var: Option<u64>) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    let mut cur = vec![0u64; r];
    fill(&mut cur, 0, degree, per_var, &mut out);
    out
}

fn fill(cur: &mut Vec<u64>, pos: usize, left: u64, per_var: Option<u64>, out: &mut Vec<Vec<u64>>) {
    let r = cur.len();
    if r == 0 {
        if left == 0 {
            out.push(Vec::new());
        }
        return;
    }
    if pos == r - 1 {
        if per_var.map_or(true, |b| left <= b) {
            cur[pos] = left;
            out.push(cur.clone());
        }
        return;
    }
    let hi = per_var.map_or(left, |b| b.min(left));
    for v in 0..=hi {
        cur[pos] = v;
        fill(cur, pos + 1, left - v, per_var, out);
    }
    cur[pos] = 0;
}

/// Graded-lex order over `[0, per_var]^r`: ascending total degree, then lex.
pub(crate) fn box_graded(r: usize, per_var: u64) -> impl Iterator<Item = Vec<u64>> {
    (0..=(r as u64) * per_var).flat_map(move |d| of_degree(r, d, Some(per_var)))
}

/// Graded-lex order over exponents of total degree at most `cap`.
pub(crate) fn simplex_graded(r: usize, cap: u64) -> impl Iterator<Item = Vec<u64>> {
    (0..=cap).flat_map(move |d| of_degree(r, d, None))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn box_order_is_graded_then_lex() {
        let all: Vec<_> = box_graded(2, 2).collect();
        assert_eq!(all.len(), 9);
        assert_eq!(all[0], vec![0, 0]);
        assert_eq!(all[1], vec![0, 1]);
        assert_eq!(all[2], vec![1, 0]);
        assert_eq!(all[8], vec![2, 2]);
        for w in all.windows(2) {
            let key = |m: &[u64]| (m.iter().sum::<u64>(), m.to_vec());
            assert!(key(&w[0]) < key(&w[1]));
        }
    }

    #[test]
    fn simplex_counts() {
        // C(cap + r, r)
        assert_eq!(simplex_graded(2, 8).count(), 45);
        assert_eq!(simplex_graded(3, 4).count(), 35);
        assert_eq!(simplex_graded(1, 0).count(), 1);
    }
}
