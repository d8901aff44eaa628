//! The verify command: runs suite jobs on a worker pool and prints the
//! report in canonical job order.

use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use tate5_core::verify::{self, Job, Options};

use crate::CliError;

#[derive(Serialize, Debug, Clone, Copy, PartialEq, Eq)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Serialize, Debug, Clone)]
pub struct Report {
    pub suite: &'static str,
    pub id: String,
    pub anchor: &'static str,
    pub status: Status,
    pub detail: String,
    pub ms: u64,
}

pub struct VerifyOptions {
    pub terms: usize,
    pub tol: f64,
    pub json: bool,
    pub timing: bool,
}

/// Jobs that compare coefficients of q-series; skipped when no terms are
/// requested.
fn needs_terms(job: &Job) -> bool {
    job.suite == "qseries" && job.id == "series"
}

fn run_job(job: &Job, opts: &VerifyOptions) -> Vec<Report> {
    let line = |id: String, status, detail: String, ms| Report { suite: job.suite, id, anchor: job.anchor, status, detail, ms };
    if opts.terms == 0 && needs_terms(job) {
        return vec![line(job.id.to_string(), Status::Skipped, "--terms 0".into(), 0)];
    }
    let start = Instant::now();
    let result = (job.run)(&Options { terms: opts.terms, tol: opts.tol });
    let ms = if opts.timing { start.elapsed().as_millis() as u64 } else { 0 };
    match result {
        Ok(checks) => checks
            .into_iter()
            .map(|c| {
                let status = if c.passed { Status::Pass } else { Status::Fail };
                line(format!("{}/{}", job.id, c.name), status, c.detail, ms)
            })
            .collect(),
        Err(e) => vec![line(job.id.to_string(), Status::Fail, e.to_string(), ms)],
    }
}

/// Returns Ok(true) when nothing failed.
pub fn verify(suite: &str, opts: &VerifyOptions, pool: &rayon::ThreadPool) -> Result<bool, CliError> {
    let jobs = verify::suite(suite)?;
    let reports: Vec<Vec<Report>> = pool.install(|| jobs.par_iter().map(|j| run_job(j, opts)).collect());
    let reports: Vec<Report> = reports.into_iter().flatten().collect();

    for r in &reports {
        if opts.json {
            crate::json::print(r);
        } else {
            let mark = match r.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Skipped => "SKIP",
            };
            if r.detail.is_empty() {
                println!("{mark} {}/{}", r.suite, r.id);
            } else {
                println!("{mark} {}/{}: {}", r.suite, r.id, r.detail);
            }
        }
    }
    summarize(&jobs, &reports);
    Ok(reports.iter().all(|r| r.status != Status::Fail))
}

fn summarize(jobs: &[Job], reports: &[Report]) {
    eprintln!("{:<9} {:<20} {:>5} {:>5} {:>5} {:>8}", "suite", "job", "pass", "fail", "skip", "ms");
    for job in jobs {
        let mine: Vec<&Report> = reports
            .iter()
            .filter(|r| r.suite == job.suite && (r.id == job.id || r.id.starts_with(&format!("{}/", job.id))))
            .collect();
        let count = |s| mine.iter().filter(|r| r.status == s).count();
        let ms = mine.first().map_or(0, |r| r.ms);
        eprintln!(
            "{:<9} {:<20} {:>5} {:>5} {:>5} {:>8}",
            job.suite,
            job.id,
            count(Status::Pass),
            count(Status::Fail),
            count(Status::Skipped),
            ms
        );
    }
    let failed = reports.iter().filter(|r| r.status == Status::Fail).count();
    eprintln!("{} checks, {failed} failed", reports.len());
}
