//! Parallel verification campaigns.

use o1ppg_core::verify::{
    aggregate_report, audit_instance, AuditConfig, InstanceAudit, Report, ReportError,
};
use o1ppg_core::O1ppg;
use rayon::prelude::*;

/// Environment variable holding the worker count.
pub const WORKERS_ENV: &str = "O1PPG_WORKERS";

/// Worker count from [`WORKERS_ENV`]; `None` leaves the choice to rayon.
pub fn workers_from_env() -> Option<usize> {
    std::env::var(WORKERS_ENV)
        .ok()?
        .trim()
        .parse()
        .ok()
        .filter(|&w| w > 0)
}

/// Audits every `(key, instance)` pair, one instance per task. The report
/// does not depend on the worker count.
pub fn run_campaign(
    instances: &[(String, O1ppg)],
    config: &AuditConfig,
    workers: Option<usize>,
) -> Result<Report, ReportError> {
    let audit = || -> Vec<InstanceAudit> {
        instances
            .par_iter()
            .map(|(key, g)| InstanceAudit {
                key: key.clone(),
                n: g.order(),
                results: audit_instance(g, key, config),
            })
            .collect()
    };
    let audits = match workers {
        Some(w) => rayon::ThreadPoolBuilder::new()
            .num_threads(w)
            .build()
            .map_or_else(|_| audit(), |pool| pool.install(audit)),
        None => audit(),
    };
    aggregate_report(config, audits)
}
