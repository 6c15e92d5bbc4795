use std::time::Instant;

use fpcoh_core::{
    format_polynomial_list, pd_bound_check, question_q_check, top_lc_vanishing_certificate, AlgebraError,
    Limits, MonomialOrder, Outcome, PolyRing, RationalPoint, Result,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::instance::random_instance;
use crate::report::CheckJson;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CampaignConfig {
    pub p: u64,
    pub n: usize,
    pub degrees: Vec<u32>,
    pub trials: usize,
    pub seed: u64,
    pub e_max: u32,
    pub max_reductions: usize,
    pub max_basis_size: usize,
    pub density: f64,
    pub homogeneous: bool,
    /// Check at a random rational point instead of the origin.
    pub random_point: bool,
    #[serde(skip)]
    pub workers: Option<usize>,
    #[serde(skip)]
    pub timing: bool,
}

impl Default for CampaignConfig {
    fn default() -> Self {
        let lim = Limits::default();
        CampaignConfig {
            p: 2,
            n: 3,
            degrees: vec![1],
            trials: 100,
            seed: 0,
            e_max: 3,
            max_reductions: lim.max_reductions,
            max_basis_size: lim.max_basis_size,
            density: 0.5,
            homogeneous: true,
            random_point: false,
            workers: None,
            timing: false,
        }
    }
}

impl CampaignConfig {
    pub fn ring(&self) -> Result<PolyRing> {
        PolyRing::new(self.p, self.n, MonomialOrder::GrevLex)
    }

    pub fn limits(&self) -> Limits {
        Limits {
            max_reductions: self.max_reductions,
            max_basis_size: self.max_basis_size,
            ..Limits::default()
        }
    }

    pub fn degree_sum(&self) -> u64 {
        self.degrees.iter().map(|&d| d as u64).sum()
    }

    fn point(&self, ring: &PolyRing, index: usize) -> Result<RationalPoint> {
        if !self.random_point {
            return Ok(RationalPoint::origin(ring));
        }
        // a separate stream family keeps instances identical with or without points
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed ^ 0x9e37_79b9_7f4a_7c15);
        rng.set_stream(index as u64);
        let coords: Vec<i64> = (0..self.n).map(|_| rng.gen_range(0..self.p) as i64).collect();
        RationalPoint::new(ring, &coords)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub hypothesis_violated: usize,
    pub resource_limit: usize,
    pub inconclusive: usize,
}

impl Summary {
    fn add(&mut self, o: Outcome) {
        match o {
            Outcome::Pass => self.pass += 1,
            Outcome::Fail => self.fail += 1,
            Outcome::HypothesisViolated => self.hypothesis_violated += 1,
            Outcome::ResourceLimit => self.resource_limit += 1,
            Outcome::Inconclusive => self.inconclusive += 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TrialRecord {
    pub index: usize,
    pub seed: u64,
    pub p: u64,
    pub n: usize,
    pub gens: String,
    pub point: Vec<u64>,
    pub outcome: &'static str,
    pub q1: CheckJson,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub topvan: Option<CheckJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pd_bound: Option<CheckJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub millis: Option<u64>,
    #[serde(skip)]
    pub combined: Outcome,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CampaignReport {
    pub config: CampaignConfig,
    pub summary: Summary,
    /// Indices of trials where a check failed with the hypothesis satisfied.
    pub findings: Vec<usize>,
    pub trials: Vec<TrialRecord>,
}

impl CampaignReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

fn rank(o: Outcome) -> u8 {
    match o {
        Outcome::Pass => 0,
        Outcome::HypothesisViolated => 1,
        Outcome::Inconclusive => 2,
        Outcome::ResourceLimit => 3,
        Outcome::Fail => 4,
    }
}

/// One trial: the q1 torsion check at the configured point, the top local cohomology
/// certificate when the saturation grows, and the pd bound for homogeneous
/// instances.
pub fn run_trial(cfg: &CampaignConfig, index: usize) -> Result<TrialRecord> {
    run_trial_with(cfg, index, &cfg.limits())
}

/// [`run_trial`] under caller-supplied limits (e.g. with an audit attached).
pub fn run_trial_with(cfg: &CampaignConfig, index: usize, limits: &Limits) -> Result<TrialRecord> {
    let start = Instant::now();
    let ring = cfg.ring()?;
    let f = random_instance(cfg, index)?;
    let a = cfg.point(&ring, index)?;
    let q1 = question_q_check(&f, &a, limits)?;
    let topvan = if q1.property_holds == Some(false) {
        Some(top_lc_vanishing_certificate(&f, &a, cfg.e_max, limits)?)
    } else {
        None
    };
    let pd = if cfg.homogeneous {
        Some(pd_bound_check(&f, limits)?)
    } else {
        None
    };
    let mut combined = q1.outcome;
    if let Some(r) = &pd {
        if rank(r.outcome) > rank(combined) {
            combined = r.outcome;
        }
    }
    Ok(TrialRecord {
        index,
        seed: cfg.seed,
        p: cfg.p,
        n: cfg.n,
        gens: format_polynomial_list(&f),
        point: a.coords().iter().map(|c| c.value()).collect(),
        outcome: combined.as_str(),
        q1: CheckJson::from(&q1),
        topvan: topvan.as_ref().map(CheckJson::from),
        pd_bound: pd.as_ref().map(CheckJson::from),
        millis: cfg.timing.then(|| start.elapsed().as_millis() as u64),
        combined,
    })
}

/// Trials run on a rayon pool; records come back in index order.
pub fn run_campaign(cfg: &CampaignConfig) -> Result<CampaignReport> {
    run_campaign_with(cfg, &cfg.limits())
}

pub fn run_campaign_with(cfg: &CampaignConfig, limits: &Limits) -> Result<CampaignReport> {
    if cfg.trials == 0 {
        return Err(AlgebraError::InvalidRing("campaign needs at least one trial"));
    }
    if cfg.degrees.is_empty() {
        return Err(AlgebraError::EmptyIdeal);
    }
    if !(cfg.density > 0.0 && cfg.density <= 1.0) {
        return Err(AlgebraError::InvalidRing("density must lie in (0, 1]"));
    }
    cfg.ring()?;
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(w) = cfg.workers {
        pool = pool.num_threads(w);
    }
    let pool = pool
        .build()
        .map_err(|_| AlgebraError::Invariant("could not start worker pool"))?;
    let trials: Vec<TrialRecord> =
        pool.install(|| (0..cfg.trials).into_par_iter().map(|i| run_trial_with(cfg, i, limits)).collect::<Result<_>>())?;
    let mut summary = Summary::default();
    let mut findings = Vec::new();
    for t in &trials {
        summary.add(t.combined);
        if t.combined == Outcome::Fail {
            findings.push(t.index);
        }
    }
    Ok(CampaignReport {
        config: cfg.clone(),
        summary,
        findings,
        trials,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reports_are_reproducible() {
        let cfg = CampaignConfig {
            p: 3,
            n: 3,
            degrees: vec![1, 1],
            trials: 12,
            seed: 4,
            workers: Some(3),
            ..CampaignConfig::default()
        };
        let a = run_campaign(&cfg).unwrap().to_json();
        let b = run_campaign(&CampaignConfig { workers: Some(1), ..cfg.clone() }).unwrap().to_json();
        assert_eq!(a, b);
    }

    #[test]
    fn trial_records_replay() {
        let cfg = CampaignConfig {
            p: 2,
            n: 4,
            degrees: vec![2],
            trials: 5,
            random_point: true,
            ..CampaignConfig::default()
        };
        let rep = run_campaign(&cfg).unwrap();
        for t in &rep.trials {
            assert_eq!(&run_trial(&cfg, t.index).unwrap(), t);
        }
        assert_eq!(rep.summary.pass + rep.summary.fail, 5);
    }

    #[test]
    fn bad_configs_are_rejected() {
        assert!(run_campaign(&CampaignConfig { trials: 0, ..CampaignConfig::default() }).is_err());
        assert!(run_campaign(&CampaignConfig { p: 4, ..CampaignConfig::default() }).is_err());
        assert!(run_campaign(&CampaignConfig { density: 0.0, ..CampaignConfig::default() }).is_err());
    }
}
