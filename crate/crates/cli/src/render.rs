//! Output rendering and atomic file writes.

use std::fs;
use std::io::Write;
use std::path::Path;

use borsuk_core::asymptotic::{AsymptoticError, AsymptoticOptimum};
use borsuk_core::bound::BoundCertificate;
use borsuk_core::oracle::OracleReport;

/// Writes via a temp file in the target directory plus rename, so readers
/// never observe a partially written file.
pub fn atomic_write(path: &Path, contents: &str) -> std::io::Result<()> {
    let dir = path.parent().filter(|d| !d.as_os_str().is_empty());
    let tmp = match dir {
        Some(d) => d.join(format!(
            ".{}.tmp",
            path.file_name().unwrap_or_default().to_string_lossy()
        )),
        None => Path::new(&format!(
            ".{}.tmp",
            path.file_name().unwrap_or_default().to_string_lossy()
        ))
        .to_path_buf(),
    };
    {
        let mut f = fs::File::create(&tmp)?;
        f.write_all(contents.as_bytes())?;
        f.sync_all()?;
    }
    fs::rename(&tmp, path)
}

pub fn certificate_table(cert: &BoundCertificate) -> String {
    let mut s = String::new();
    s.push_str("Lower bound certificate\n");
    s.push_str(&format!(
        "  n = {}   k = {}   p = {}   lambda = {}\n",
        cert.params.n, cert.params.k, cert.params.p, cert.params.lambda
    ));
    s.push_str(&format!("  d = C({},2) = {}\n", cert.params.n, cert.d));
    s.push_str(&format!("  t0 = {}\n", cert.t0));
    s.push_str(&format!(
        "  t1 = {}   (k - t1 = {}, prime power)\n",
        cert.t1,
        cert.params.k - cert.t1
    ));
    match cert.adjusted_lambda {
        Some(l) => s.push_str(&format!("  adjusted lambda = {l}\n")),
        None => s.push_str("  adjusted lambda = none (input realizes the diameter)\n"),
    }
    s.push_str(&format!("  C(n, k)          = {}\n", cert.numerator));
    s.push_str(&format!("  C(n, k - t1 - 1) = {}\n", cert.denominator));
    s.push_str(&format!(
        "  lower bound      = ceil({} / {}) = {}\n",
        cert.numerator, cert.denominator, cert.lower_bound
    ));
    let checks: Vec<String> = cert
        .checks
        .iter()
        .map(|c| format!("{}={}", c.name, if c.pass { "pass" } else { "fail" }))
        .collect();
    s.push_str(&format!("  checks: {}\n", checks.join(" ")));
    s
}

pub fn certificate_csv(cert: &BoundCertificate) -> String {
    format!(
        "n,k,p,lambda,d,t0,t1,numerator,denominator,lower_bound\n{},{},{},{},{},{},{},{},{},{}\n",
        cert.params.n,
        cert.params.k,
        cert.params.p,
        cert.params.lambda,
        cert.d,
        cert.t0,
        cert.t1,
        cert.numerator,
        cert.denominator,
        cert.lower_bound
    )
}

pub fn search_ranking_csv(certs: &[BoundCertificate], top: usize) -> String {
    let mut s = String::from("rank,n,k,lambda,t1,bound\n");
    for (i, c) in certs.iter().take(top).enumerate() {
        s.push_str(&format!(
            "{},{},{},{},{},{}\n",
            i + 1,
            c.params.n,
            c.params.k,
            c.params.lambda,
            c.t1,
            c.lower_bound
        ));
    }
    s
}

pub fn search_ranking_table(certs: &[BoundCertificate], top: usize) -> String {
    let mut s = String::from("rank    n    k  lambda        t1  bound\n");
    for (i, c) in certs.iter().take(top).enumerate() {
        s.push_str(&format!(
            "{:>4} {:>4} {:>4}  {:<12} {:>2}  {}\n",
            i + 1,
            c.params.n,
            c.params.k,
            c.params.lambda.to_string(),
            c.t1,
            c.lower_bound
        ));
    }
    s
}

pub fn curve_table(rows: &[(f64, Result<AsymptoticOptimum, AsymptoticError>)]) -> String {
    let mut s = String::from("     p  -lambda*   k/n      t0/n     c(p)\n");
    for (p, row) in rows {
        match row {
            Ok(o) => s.push_str(&format!(
                "{:>6.2}  {:.4}    {:.4}    {:.4}   {:.4}\n",
                p, -o.lambda_star, o.kappa_star, o.tau_star, o.c_value
            )),
            Err(e) => s.push_str(&format!("{p:>6.2}  error: {e}\n")),
        }
    }
    s
}

pub fn curve_record(rows: &[(f64, Result<AsymptoticOptimum, AsymptoticError>)]) -> String {
    let mut s = String::from("record = asymptotic_curve\n");
    s.push_str(&format!("rows = {}\n", rows.len()));
    for (i, (p, row)) in rows.iter().enumerate() {
        s.push_str(&format!("row.{i}.p = {p}\n"));
        match row {
            Ok(o) => {
                s.push_str(&format!("row.{i}.c = {}\n", o.c_value));
                s.push_str(&format!("row.{i}.lambda = {}\n", o.lambda_star));
                s.push_str(&format!("row.{i}.kappa = {}\n", o.kappa_star));
                s.push_str(&format!("row.{i}.tau = {}\n", o.tau_star));
            }
            Err(e) => s.push_str(&format!("row.{i}.error = {e}\n")),
        }
    }
    s
}

pub struct SweepRow {
    pub p: f64,
    pub t0: f64,
    pub t1: Option<u32>,
    pub bound: Option<String>,
}

pub fn sweep_table(rows: &[SweepRow], threshold: Option<f64>) -> String {
    let mut s = String::from("     p        t0  t1  bound\n");
    for row in rows {
        let t1 = row.t1.map_or("-".to_string(), |t| t.to_string());
        let bound = row.bound.clone().unwrap_or_else(|| "-".to_string());
        s.push_str(&format!("{:>6.3}  {:>8.5}  {:>2}  {}\n", row.p, row.t0, t1, bound));
    }
    match threshold {
        Some(p) => s.push_str(&format!("smallest p with t1 = 4: {p:.3}\n")),
        None => s.push_str("smallest p with t1 = 4: none in range\n"),
    }
    s
}

pub fn sweep_csv(rows: &[SweepRow]) -> String {
    let mut s = String::from("p,t0,t1,bound\n");
    for row in rows {
        let t1 = row.t1.map_or(String::new(), |t| t.to_string());
        let bound = row.bound.clone().unwrap_or_default();
        s.push_str(&format!("{},{},{},{}\n", row.p, row.t0, t1, bound));
    }
    s
}

pub fn sweep_record(rows: &[SweepRow], threshold: Option<f64>) -> String {
    let mut s = String::from("record = exponent_sweep\n");
    s.push_str("instance = n=29 k=9 lambda=-1/3\n");
    s.push_str(&format!("rows = {}\n", rows.len()));
    for (i, row) in rows.iter().enumerate() {
        s.push_str(&format!("row.{i}.p = {}\n", row.p));
        s.push_str(&format!("row.{i}.t0 = {}\n", row.t0));
        if let Some(t1) = row.t1 {
            s.push_str(&format!("row.{i}.t1 = {t1}\n"));
        }
        if let Some(bound) = &row.bound {
            s.push_str(&format!("row.{i}.bound = {bound}\n"));
        }
    }
    match threshold {
        Some(p) => s.push_str(&format!("threshold_t1_4 = {p}\n")),
        None => s.push_str("threshold_t1_4 = none\n"),
    }
    s
}

pub fn oracle_lines(reports: &[OracleReport]) -> String {
    let mut s = String::new();
    for r in reports {
        s.push_str(&format!("{r}\n"));
    }
    let failed = reports.iter().filter(|r| !r.passed).count();
    let skipped = reports.iter().filter(|r| r.skipped).count();
    s.push_str(&format!(
        "{} oracles: {} passed ({} skipped), {} failed\n",
        reports.len(),
        reports.len() - failed,
        skipped,
        failed
    ));
    s
}

pub fn oracle_record(reports: &[OracleReport], scope: &str, seed: u64) -> String {
    let mut s = String::from("record = oracle_suite\n");
    s.push_str(&format!("scope = {scope}\n"));
    s.push_str(&format!("seed = {seed}\n"));
    s.push_str(&format!("oracles = {}\n", reports.len()));
    s.push_str(&format!(
        "failed = {}\n",
        reports.iter().filter(|r| !r.passed).count()
    ));
    for (i, r) in reports.iter().enumerate() {
        let status = if r.skipped {
            "skip"
        } else if r.passed {
            "pass"
        } else {
            "fail"
        };
        s.push_str(&format!("oracle.{i}.name = {}\n", r.oracle_name));
        s.push_str(&format!("oracle.{i}.instance = {}\n", r.instance));
        s.push_str(&format!("oracle.{i}.status = {status}\n"));
        if let Some(e) = r.max_error {
            s.push_str(&format!("oracle.{i}.max_error = {e}\n"));
        }
        if !r.detail.is_empty() {
            s.push_str(&format!("oracle.{i}.detail = {}\n", r.detail));
        }
    }
    s
}
