//! JSON system specs and seeded random corpora of valid systems.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::forms::{validate_with_width, LinearFormSystem};

/// `{"r": 1, "C": [[2]], "D": [[1], [1]], "label": "binomial"}`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SystemSpec {
    pub r: usize,
    #[serde(rename = "C")]
    pub c: Vec<Vec<i64>>,
    #[serde(rename = "D")]
    pub d: Vec<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
}

impl SystemSpec {
    pub fn from_system(sys: &LinearFormSystem, label: Option<String>) -> Self {
        SystemSpec { r: sys.r(), c: sys.c().to_vec(), d: sys.d().to_vec(), label }
    }

    pub fn to_system(&self) -> Result<LinearFormSystem> {
        validate_with_width(self.r, &self.c, &self.d)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CorpusParams {
    pub count: usize,
    pub seed: u64,
    pub max_r: usize,
    pub max_forms: usize,
    pub max_coeff: i64,
}

impl Default for CorpusParams {
    fn default() -> Self {
        CorpusParams { count: 200, seed: 2024, max_r: 2, max_forms: 3, max_coeff: 3 }
    }
}

/// Splits `total` into `parts` nonnegative pieces, none above `cap`.
fn composition(rng: &mut ChaCha8Rng, total: i64, parts: usize, cap: i64) -> Option<Vec<i64>> {
    if total > cap * parts as i64 {
        return None;
    }
    let mut out = vec![0; parts];
    for _ in 0..total {
        let open: Vec<usize> = (0..parts).filter(|&i| out[i] < cap).collect();
        out[*open.choose(rng)?] += 1;
    }
    Some(out)
}

fn draw(rng: &mut ChaCha8Rng, p: &CorpusParams) -> Option<LinearFormSystem> {
    let r = rng.gen_range(1..=p.max_r);
    let j = rng.gen_range(1..=p.max_forms);
    let k = rng.gen_range(1..=p.max_forms);
    let c: Vec<Vec<i64>> = (0..j).map(|_| (0..r).map(|_| rng.gen_range(0..=p.max_coeff)).collect()).collect();
    let mut d = vec![vec![0; r]; k];
    for s in 0..r {
        let total: i64 = c.iter().map(|row| row[s]).sum();
        for (row, v) in d.iter_mut().zip(composition(rng, total, k, p.max_coeff)?) {
            row[s] = v;
        }
    }
    validate_with_width(r, &c, &d).ok()
}

/// `count` valid systems, reproducible from the seed. Draws that fail
/// validation are discarded and redrawn.
pub fn generate_corpus(params: &CorpusParams) -> Vec<SystemSpec> {
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let width = params.count.to_string().len().max(3);
    let mut out = Vec::with_capacity(params.count);
    while out.len() < params.count {
        if let Some(sys) = draw(&mut rng, params) {
            let label = format!("sys-{:0width$}", out.len() + 1);
            out.push(SystemSpec::from_system(&sys, Some(label)));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spec_round_trip() {
        let text = r#"{"r":1,"C":[[2]],"D":[[1],[1]],"label":"binomial"}"#;
        let spec: SystemSpec = serde_json::from_str(text).unwrap();
        assert_eq!(spec.to_system().unwrap().k_count(), 2);
        assert_eq!(serde_json::to_string(&spec).unwrap(), text);
    }

    #[test]
    fn corpus_is_valid_and_seeded() {
        let params = CorpusParams { count: 50, ..Default::default() };
        let a = generate_corpus(&params);
        assert_eq!(a.len(), 50);
        assert!(a.iter().all(|s| s.to_system().is_ok()));
        assert_eq!(a, generate_corpus(&params));
        assert_ne!(a, generate_corpus(&CorpusParams { seed: 7, ..params }));
        assert!(generate_corpus(&CorpusParams { count: 0, ..params }).is_empty());
        for s in &a {
            assert!(s.r <= 2 && s.c.len() <= 3 && s.d.len() <= 3);
            assert!(s.c.iter().chain(&s.d).flatten().all(|&v| (0..=3).contains(&v)));
        }
    }
}
