//! Resource ceilings, cooperative cancellation and Groebner-basis auditing.

use alloc::sync::Arc;
use core::sync::atomic::{AtomicBool, AtomicUsize, Ordering};

use crate::error::{AlgebraError, Ceiling, Result};

/// Shared flag checked between reduction steps.
#[derive(Debug, Clone, Default)]
pub struct CancelToken(Arc<AtomicBool>);

impl CancelToken {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn cancel(&self) {
        self.0.store(true, Ordering::Relaxed);
    }

    pub fn is_cancelled(&self) -> bool {
        self.0.load(Ordering::Relaxed)
    }
}

/// Counters filled when confluence auditing is switched on.
#[derive(Debug, Default)]
pub struct GbAudit {
    verified: AtomicUsize,
    failed: AtomicUsize,
}

impl GbAudit {
    pub fn new() -> Arc<Self> {
        Arc::new(Self::default())
    }

    pub fn verified(&self) -> usize {
        self.verified.load(Ordering::Relaxed)
    }

    pub fn failed(&self) -> usize {
        self.failed.load(Ordering::Relaxed)
    }

    pub(crate) fn record(&self, ok: bool) {
        if ok {
            self.verified.fetch_add(1, Ordering::Relaxed);
        } else {
            self.failed.fetch_add(1, Ordering::Relaxed);
        }
    }
}

#[derive(Debug, Clone)]
pub struct Limits {
    /// Reduction steps allowed in a single Groebner basis computation.
    pub max_reductions: usize,
    /// Elements allowed in an intermediate basis.
    pub max_basis_size: usize,
    /// Colon iterations allowed in one saturation.
    pub max_saturation_steps: usize,
    /// Standard monomials counted before a quotient is declared not of finite
    /// length.
    pub max_standard_monomials: usize,
    pub cancel: Option<CancelToken>,
    /// When set, every computed basis is re-checked with an unoptimised
    /// S-pair pass and the verdict counted here.
    pub audit: Option<Arc<GbAudit>>,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_reductions: 2_000_000,
            max_basis_size: 20_000,
            max_saturation_steps: 64,
            max_standard_monomials: 100_000,
            cancel: None,
            audit: None,
        }
    }
}

impl Limits {
    pub fn with_audit(mut self, audit: Arc<GbAudit>) -> Self {
        self.audit = Some(audit);
        self
    }

    pub fn with_cancel(mut self, cancel: CancelToken) -> Self {
        self.cancel = Some(cancel);
        self
    }

    pub(crate) fn check_cancel(&self) -> Result<()> {
        match &self.cancel {
            Some(c) if c.is_cancelled() => Err(AlgebraError::Cancelled),
            _ => Ok(()),
        }
    }

    pub(crate) fn exceeded(c: Ceiling) -> AlgebraError {
        AlgebraError::ResourceLimit(c)
    }
}
