use std::fs;
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use anyhow::{bail, Context};
use inclust::format::{parse_instance, print_boolean, InstanceFile};
use inclust::report::{Cover, InstanceSummary, KernelReport, Report, Witness};
use inclust_core::encode::{decode_row, solve_qary, Metric};
use inclust_core::kernelize::kernelize as run_kernel;
use inclust_core::solve::{solve_completion, solve_via_kernel_report, Answer, SolverBudget};
use inclust_core::{covering_certificate, verify_solution};
use serde::Serialize;

use crate::{Status, UsageError};

pub struct Loaded {
    pub file: InstanceFile,
    pub summary: InstanceSummary,
    pub parse_ms: f64,
}

fn millis(since: Instant) -> f64 {
    since.elapsed().as_secs_f64() * 1e3
}

pub fn load(path: &Path, keep_duplicates: bool) -> anyhow::Result<Loaded> {
    let start = Instant::now();
    let text = fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    let parsed = parse_instance(&text, keep_duplicates).with_context(|| format!("{}", path.display()))?;
    let summary = InstanceSummary::new(&parsed.file, keep_duplicates, parsed.duplicates_dropped);
    Ok(Loaded { file: parsed.file, summary, parse_ms: millis(start) })
}

fn emit(report: &Report, to: Option<&Path>) -> anyhow::Result<()> {
    let json = report.to_json();
    match to {
        Some(p) => fs::write(p, json + "\n").with_context(|| format!("cannot write {}", p.display())),
        None => {
            println!("{json}");
            Ok(())
        }
    }
}

fn status_of(answer: Answer) -> Status {
    match answer {
        Answer::Yes => Status::Success,
        Answer::No => Status::No,
        Answer::BudgetExhausted => Status::Exhausted,
    }
}

pub fn cover(path: &Path, keep_duplicates: bool) -> anyhow::Result<Status> {
    let loaded = load(path, keep_duplicates)?;
    let start = Instant::now();
    let cert = match &loaded.file {
        InstanceFile::Boolean(i) => covering_certificate(i.rows()),
        InstanceFile::Qary(q) => q.matrix.certificate(),
    };
    let mut report = Report::new("cover", loaded.summary);
    report.cover = Some(Cover::from(&cert));
    report.timings.insert("parse".into(), loaded.parse_ms);
    report.timings.insert("cover".into(), millis(start));
    emit(&report, None)?;
    Ok(Status::Success)
}

pub fn kernelize(path: &Path, output: Option<&Path>, keep_duplicates: bool) -> anyhow::Result<Status> {
    let loaded = load(path, keep_duplicates)?;
    let InstanceFile::Boolean(inst) = &loaded.file else {
        bail!(UsageError("kernelization of q-ary instances is not supported; use `solve`".into()));
    };
    let start = Instant::now();
    let kr = run_kernel(inst);
    let mut report = Report::new("kernelize", loaded.summary);
    report.timings.insert("parse".into(), loaded.parse_ms);
    report.timings.insert("kernelize".into(), millis(start));
    report.cover = Some(Cover::from(&kr.certificate));
    report.kernel = Some(KernelReport::from(&kr));
    let status = match &kr.reduced {
        Some(reduced) => {
            if let Some(out) = output {
                fs::write(out, print_boolean(reduced)).with_context(|| format!("cannot write {}", out.display()))?;
            }
            Status::Success
        }
        None => {
            report.decision = Some(Answer::No);
            Status::No
        }
    };
    emit(&report, None)?;
    Ok(status)
}

pub struct SolveOpts {
    pub via_kernel: bool,
    pub metric: Option<Metric>,
    pub budget: SolverBudget,
    pub keep_duplicates: bool,
}

/// Solves a loaded instance into a report.
pub fn solve_loaded(loaded: Loaded, opts: &SolveOpts) -> anyhow::Result<Report> {
    let mut report = Report::new("solve", loaded.summary);
    report.timings.insert("parse".into(), loaded.parse_ms);
    let start = Instant::now();
    match loaded.file {
        InstanceFile::Boolean(inst) => {
            if opts.metric.is_some() {
                bail!(UsageError("--metric applies to q-ary instances only".into()));
            }
            report.cover = Some(Cover::from(&covering_certificate(inst.rows())));
            let decision = if opts.via_kernel {
                let via = solve_via_kernel_report(&inst, &opts.budget);
                report.kernel = Some(KernelReport::from(&via.kernel));
                if let Some(e) = via.lift_error {
                    report.note = Some(format!("kernel answered YES but lifting failed: {e}"));
                }
                via.decision
            } else {
                solve_completion(&inst, &opts.budget)
            };
            report.decision = Some(decision.answer);
            report.witness = decision.witness.as_ref().map(Witness::from_solution);
        }
        InstanceFile::Qary(mut qi) => {
            if opts.via_kernel {
                bail!(UsageError("--via-kernel is not available for q-ary instances".into()));
            }
            if let Some(m) = opts.metric {
                qi.metric = m;
                report.instance.metric = Some(m);
            }
            report.cover = Some(Cover::from(&qi.matrix.certificate()));
            let decision = solve_qary(&qi, &opts.budget);
            report.decision = Some(decision.answer);
            report.witness =
                decision.witness.as_ref().map(|w| Witness::from_solution(w).with_decoding(qi.matrix.q(), qi.metric));
        }
    }
    report.timings.insert("solve".into(), millis(start));
    Ok(report)
}

pub fn solve(path: &Path, opts: &SolveOpts, report_path: Option<&Path>) -> anyhow::Result<Status> {
    let report = solve_loaded(load(path, opts.keep_duplicates)?, opts)?;
    emit(&report, report_path)?;
    Ok(status_of(report.decision.expect("solve always decides")))
}

pub fn verify(instance: &Path, report_path: &Path) -> anyhow::Result<Status> {
    let text = fs::read_to_string(report_path).with_context(|| format!("cannot read {}", report_path.display()))?;
    let report = Report::from_json(&text).with_context(|| format!("{} is not a report", report_path.display()))?;
    let loaded = load(instance, report.instance.keep_duplicates)?;
    let fail = |reason: String| {
        println!("FAIL: {reason}");
        Ok(Status::No)
    };
    let s = &loaded.summary;
    if (s.rows, s.dim, s.q) != (report.instance.rows, report.instance.dim, report.instance.q) {
        return fail(format!(
            "report describes {} rows of dimension {}, the instance has {} rows of dimension {}",
            report.instance.rows, report.instance.dim, s.rows, s.dim
        ));
    }
    let Some(witness) = &report.witness else {
        return fail(match report.decision {
            Some(Answer::Yes) => "YES report carries no witness".into(),
            Some(a) => format!("nothing to verify: decision {}", a.name()),
            None => "nothing to verify: report has no decision".into(),
        });
    };
    let sol = match witness.to_solution() {
        Ok(sol) => sol,
        Err(e) => return fail(e.to_string()),
    };
    let target = match loaded.file {
        InstanceFile::Boolean(i) => i,
        InstanceFile::Qary(mut qi) => {
            if let Some(m) = report.instance.metric {
                qi.metric = m;
            }
            for (i, row) in sol.completion.iter().enumerate() {
                if decode_row(row, qi.matrix.q(), qi.metric.encoding()).is_err() {
                    return fail(format!("completion row {} is not block-preserving", i + 1));
                }
            }
            qi.encoded()
        }
    };
    match verify_solution(&target, &sol) {
        Ok(()) => {
            println!("OK: {} clusters, {} rows", sol.clusters.len(), sol.completion.len());
            Ok(Status::Success)
        }
        Err(v) => fail(one_based_violation(&v)),
    }
}

/// The violation message with row, coordinate and cluster numbers made 1-based.
fn one_based_violation(v: &inclust_core::Violation) -> String {
    use inclust_core::Violation as V;
    let mut v = v.clone();
    match &mut v {
        V::CompletionDimension { row, .. } | V::Incomplete { row } | V::NotPartition { row } => *row += 1,
        V::CompletionDisagrees { row, coord } => {
            *row += 1;
            *coord += 1;
        }
        V::EmptyCluster { cluster } | V::CenterKind { cluster } | V::BadCenterVector { cluster } => *cluster += 1,
        V::CenterOutsideCluster { cluster, center } => {
            *cluster += 1;
            *center += 1;
        }
        V::TooFarFromCenter { cluster, row, .. } => {
            *cluster += 1;
            *row += 1;
        }
        V::DiameterExceeded { cluster, a, b, .. } => {
            *cluster += 1;
            *a += 1;
            *b += 1;
        }
        V::Shape(_) | V::ClusterBudget { .. } => {}
    }
    v.to_string()
}

#[derive(Serialize)]
struct BenchRow {
    file: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    answer: Option<Answer>,
    #[serde(skip_serializing_if = "Option::is_none")]
    rows: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    kernel_rows: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
    ms: f64,
}

#[derive(Serialize, Default)]
struct BenchSummary {
    yes: usize,
    no: usize,
    budget_exhausted: usize,
    errors: usize,
    total_ms: f64,
}

fn collect_instances(paths: &[PathBuf]) -> anyhow::Result<Vec<PathBuf>> {
    let mut out = Vec::new();
    for p in paths {
        if p.is_dir() {
            let mut found: Vec<PathBuf> = fs::read_dir(p)
                .with_context(|| format!("cannot list {}", p.display()))?
                .filter_map(|e| e.ok().map(|e| e.path()))
                .filter(|f| f.extension().is_some_and(|x| x == "inst"))
                .collect();
            found.sort();
            out.extend(found);
        } else {
            out.push(p.clone());
        }
    }
    Ok(out)
}

fn bench_one(path: &Path, opts: &SolveOpts) -> BenchRow {
    let start = Instant::now();
    let file = path.display().to_string();
    let result = load(path, opts.keep_duplicates).and_then(|l| solve_loaded(l, opts));
    match result {
        Ok(report) => BenchRow {
            file,
            answer: report.decision,
            rows: Some(report.instance.rows),
            kernel_rows: report.kernel.as_ref().and_then(|k| k.reduced_rows),
            error: None,
            ms: millis(start),
        },
        Err(e) => BenchRow { file, answer: None, rows: None, kernel_rows: None, error: Some(format!("{e:#}")), ms: millis(start) },
    }
}

pub fn bench(paths: &[PathBuf], jobs: usize, opts: &SolveOpts) -> anyhow::Result<Status> {
    if jobs == 0 {
        bail!(UsageError("--jobs must be at least 1".into()));
    }
    let files = collect_instances(paths)?;
    let start = Instant::now();
    let next = AtomicUsize::new(0);
    let results: Mutex<Vec<Option<BenchRow>>> = Mutex::new((0..files.len()).map(|_| None).collect());
    std::thread::scope(|s| {
        for _ in 0..jobs.min(files.len().max(1)) {
            s.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some(f) = files.get(i) else { break };
                let row = bench_one(f, opts);
                results.lock().expect("no worker panics while holding the lock")[i] = Some(row);
            });
        }
    });
    let rows: Vec<BenchRow> = results.into_inner().expect("workers finished").into_iter().flatten().collect();
    let mut summary = BenchSummary { total_ms: millis(start), ..BenchSummary::default() };
    for r in &rows {
        match r.answer {
            Some(Answer::Yes) => summary.yes += 1,
            Some(Answer::No) => summary.no += 1,
            Some(Answer::BudgetExhausted) => summary.budget_exhausted += 1,
            None => summary.errors += 1,
        }
    }
    let doc = serde_json::json!({ "results": rows, "summary": summary });
    println!("{}", serde_json::to_string_pretty(&doc)?);
    Ok(Status::Success)
}
