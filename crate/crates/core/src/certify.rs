//! The full certification pipeline for one system: step-function criteria,
//! lattice-point criteria, series integrality and the hypergeometric
//! identities, with the cross-checks that tie them together.

use std::collections::BTreeMap;
use std::time::Instant;

use serde::Serialize;

use crate::cells::{min_phi, PhiSummary};
use crate::corpus::SystemSpec;
use crate::error::Result;
use crate::forms::{find_witness_adaptive, integrality_scan, LinearFormSystem, RatioWitness};
use crate::geometry::{
    build_configuration, denominator_count_check, dilate_summary, ConeGeometry, CountVerdict, DilateSummary,
};
use crate::hypergeom::{
    box_check, build_f_v0, build_g_i, euler_check, lattice_element, minimal_negative_support_check,
    quasi_solution_check, v0, Specialize,
};
use crate::series::{
    all_form_indices, integrality_report, mirror_map, series_f, series_g, FormIndex, SeriesWitness,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CertifyOptions {
    /// Total-degree cap for `F`, `G` and the mirror maps.
    pub cap: u64,
    /// Box `[0, P]^r` for the hypergeometric series.
    pub pbox: i64,
    /// Box for the direct `E(m)` scan.
    pub scan_bound: u64,
    /// Largest box the non-integrality witness search may grow to.
    pub witness_cap: u64,
    pub timings: bool,
}

impl Default for CertifyOptions {
    fn default() -> Self {
        CertifyOptions { cap: 8, pbox: 6, scan_bound: 8, witness_cap: 64, timings: false }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct LandauSection {
    pub holds: bool,
    pub min_phi: i64,
    pub phi: PhiSummary,
}

#[derive(Clone, Debug, Serialize)]
pub struct DelaygueSection {
    /// Landau together with `Φ ≥ 1` on `𝒟`.
    pub holds: bool,
    pub phi_at_least_one_on_d: bool,
    pub min_on_d: Option<i64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct GeometrySection {
    #[serde(flatten)]
    pub dilates: DilateSummary,
    pub denominator_count: CountVerdict,
}

#[derive(Clone, Debug, Serialize)]
pub struct MirrorSummary {
    pub which: String,
    pub all_integral: bool,
    pub first_witness: Option<SeriesWitness>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SeriesSection {
    pub cap: u64,
    pub scan_bound: u64,
    pub f_integral: bool,
    pub f_first_witness: Option<SeriesWitness>,
    pub scan_all_integral: bool,
    /// Non-integral `E(m)` from the growing search, when one was needed.
    pub ratio_witness: Option<RatioWitness>,
    pub ratio_witness_bound: Option<u64>,
    /// Absent when the Landau criterion fails.
    pub mirror_maps: Option<Vec<MirrorSummary>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct QuasiSummary {
    pub i: usize,
    pub passed: bool,
    pub checked: usize,
    pub boundary_skipped: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct HypergeometricSection {
    pub pbox: i64,
    pub euler_ok: bool,
    pub box_generators_ok: bool,
    pub v0_minimal_negative_support: bool,
    pub specialization_matches_f: bool,
    /// `specialize(G_i) = −G` for every `i = r+1, …, n`.
    pub g_sign_minus_one: bool,
    pub quasi_solutions: Vec<QuasiSummary>,
    /// For `i = n+1, …, n+r`; only computed when the distinguished point is
    /// the unique interior point.
    pub ihat_minimal: Option<Vec<bool>>,
}

impl HypergeometricSection {
    pub fn all_pass(&self) -> bool {
        self.euler_ok
            && self.box_generators_ok
            && self.v0_minimal_negative_support
            && self.specialization_matches_f
            && self.g_sign_minus_one
            && self.quasi_solutions.iter().all(|q| q.passed)
            && self.ihat_minimal.as_ref().map_or(true, |v| v.iter().all(|&b| b))
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CrossChecks {
    /// Landau holds iff `(J+r)Δ(A)` has no interior lattice point.
    pub landau_vs_hollow_dilate: bool,
    /// Delaygue holds iff the distinguished point is the unique interior
    /// lattice point of `(J+r+1)Δ(A)`.
    pub delaygue_vs_unique_interior: bool,
    /// `min interior Σu = J + r + min Φ`.
    pub min_sum_identity: bool,
    /// Landau ⇒ `F` integral through the cap; otherwise a witness was found.
    pub integrality_vs_landau: bool,
    /// Delaygue ⇒ every mirror map integral through the cap.
    pub mirror_vs_delaygue: bool,
    /// `K ≤ J` ⇒ a non-integral `E(m)` was found.
    pub denominator_count: bool,
    pub hypergeometric_identities: bool,
}

impl CrossChecks {
    pub fn all_agree(&self) -> bool {
        self.landau_vs_hollow_dilate
            && self.delaygue_vs_unique_interior
            && self.min_sum_identity
            && self.integrality_vs_landau
            && self.mirror_vs_delaygue
            && self.denominator_count
            && self.hypergeometric_identities
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CertificationReport {
    pub label: Option<String>,
    pub system: SystemSpec,
    pub landau: LandauSection,
    pub delaygue: DelaygueSection,
    pub geometry: GeometrySection,
    pub series: SeriesSection,
    pub hypergeometric: HypergeometricSection,
    pub cross_checks: CrossChecks,
    pub all_agree: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings_ms: Option<BTreeMap<&'static str, f64>>,
}

struct Clock {
    on: bool,
    last: Instant,
    laps: BTreeMap<&'static str, f64>,
}

impl Clock {
    fn new(on: bool) -> Self {
        Clock { on, last: Instant::now(), laps: BTreeMap::new() }
    }

    fn lap(&mut self, name: &'static str) {
        if self.on {
            let now = Instant::now();
            self.laps.insert(name, (now - self.last).as_secs_f64() * 1e3);
            self.last = now;
        }
    }
}

fn series_section(
    sys: &LinearFormSystem,
    opts: &CertifyOptions,
    landau: bool,
) -> Result<SeriesSection> {
    let f_report = integrality_report(&series_f(sys, opts.cap), None)?;
    let scan = integrality_scan(sys, opts.scan_bound, false);
    let (ratio_witness, ratio_witness_bound) = if landau {
        (None, None)
    } else {
        let (bound, w) = find_witness_adaptive(sys, opts.scan_bound.max(1), opts.witness_cap);
        (w, Some(bound))
    };
    let mirror_maps = if landau {
        let mut out = Vec::new();
        for which in all_form_indices(sys) {
            let (_, rep) = mirror_map(sys, which, opts.cap)?;
            out.push(MirrorSummary {
                which: which.to_string(),
                all_integral: rep.all_integral,
                first_witness: rep.first_witness().cloned(),
            });
        }
        Some(out)
    } else {
        None
    };
    Ok(SeriesSection {
        cap: opts.cap,
        scan_bound: opts.scan_bound,
        f_integral: f_report.all_integral,
        f_first_witness: f_report.first_witness().cloned(),
        scan_all_integral: scan.all_integral(),
        ratio_witness,
        ratio_witness_bound,
        mirror_maps,
    })
}

fn hypergeometric_section(
    sys: &LinearFormSystem,
    geom: &ConeGeometry,
    pbox: i64,
    unique_interior: bool,
) -> Result<HypergeometricSection> {
    let config = &geom.config;
    let (r, n) = (config.r(), config.dim());
    let f = build_f_v0(sys, pbox)?;
    let mut box_generators_ok = true;
    for s in 0..r {
        let mut p = vec![0; r];
        p[s] = 1;
        box_generators_ok &= box_check(&f, &lattice_element(config, &p)).passed;
    }
    let cap = pbox.max(0) as u64;
    let specialization_matches_f = f.specialize()? == series_f(sys, cap);
    let mut g_sign_minus_one = true;
    let mut euler_ok = euler_check(&f).is_ok();
    let mut quasi_solutions = Vec::new();
    for i in r + 1..=n {
        let g = build_g_i(sys, i, pbox)?;
        euler_ok &= euler_check(&g).is_ok();
        let which = if i <= r + sys.j_count() { FormIndex::C(i - r) } else { FormIndex::D(i - r - sys.j_count()) };
        g_sign_minus_one &= g.specialize()? == series_g(sys, which, cap)?.neg();
        let q = quasi_solution_check(sys, i, pbox)?;
        quasi_solutions.push(QuasiSummary {
            i,
            passed: q.passed,
            checked: q.boxes.checked,
            boundary_skipped: q.boxes.boundary_skipped,
        });
    }
    let v = v0(config);
    let v0_minimal_negative_support = minimal_negative_support_check(config, &v, pbox, None)?.minimal_within_box;
    let ihat_minimal = if unique_interior {
        let mut out = Vec::new();
        for i in n + 1..=n + r {
            out.push(minimal_negative_support_check(config, &v, pbox, Some(i))?.minimal_within_box);
        }
        Some(out)
    } else {
        None
    };
    Ok(HypergeometricSection {
        pbox,
        euler_ok,
        box_generators_ok,
        v0_minimal_negative_support,
        specialization_matches_f,
        g_sign_minus_one,
        quasi_solutions,
        ihat_minimal,
    })
}

pub fn certify(sys: &LinearFormSystem, label: Option<String>, opts: &CertifyOptions) -> Result<CertificationReport> {
    let mut clock = Clock::new(opts.timings);
    let phi = min_phi(sys);
    let landau = phi.landau_holds();
    let delaygue = landau && phi.phi_at_least_one_on_d();
    clock.lap("cells");

    let geom = ConeGeometry::new(build_configuration(sys)?)?;
    let dilates = dilate_summary(&geom);
    let denominator_count = denominator_count_check(sys, opts.scan_bound.max(1), opts.witness_cap);
    clock.lap("geometry");

    let series = series_section(sys, opts, landau)?;
    clock.lap("series");

    let hypergeometric = hypergeometric_section(sys, &geom, opts.pbox, dilates.unique_interior_point)?;
    clock.lap("hypergeometric");

    let level = (sys.j_count() + sys.r()) as i64;
    let cross_checks = CrossChecks {
        landau_vs_hollow_dilate: landau == dilates.hollow_landau_dilate,
        delaygue_vs_unique_interior: delaygue == dilates.unique_interior_point,
        min_sum_identity: dilates.min_interior_sum == Some(level + phi.min_value),
        integrality_vs_landau: if landau {
            series.f_integral && series.scan_all_integral
        } else {
            series.ratio_witness.is_some()
        },
        mirror_vs_delaygue: !delaygue
            || series.mirror_maps.as_ref().is_some_and(|m| m.iter().all(|s| s.all_integral)),
        denominator_count: match &denominator_count {
            CountVerdict::NoPrediction => true,
            CountVerdict::NonIntegralWitness { .. } => !landau,
            CountVerdict::WitnessNotFound { .. } => false,
        },
        hypergeometric_identities: hypergeometric.all_pass(),
    };
    let all_agree = cross_checks.all_agree();
    Ok(CertificationReport {
        label: label.clone(),
        system: SystemSpec::from_system(sys, label),
        landau: LandauSection { holds: landau, min_phi: phi.min_value, phi: phi.clone() },
        delaygue: DelaygueSection {
            holds: delaygue,
            phi_at_least_one_on_d: phi.phi_at_least_one_on_d(),
            min_on_d: phi.min_on_d,
        },
        geometry: GeometrySection { dilates, denominator_count },
        series,
        hypergeometric,
        cross_checks,
        all_agree,
        timings_ms: opts.timings.then_some(clock.laps),
    })
}
