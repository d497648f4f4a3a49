//! The subcommands as plain functions returning their output.

use crate::document::{parse_rational, ArrangementDocument};
use crate::error::{CliError, EXIT_FAILURE, EXIT_PASS};
use crate::render::render_svg;
use clap::ValueEnum;
use hyparr_core::arrangement::{
    make_catalan_type, make_cox_a, make_cox_b, make_m_catalan, random_deformation_a,
    random_deformation_b, RandomOffsets,
};
use hyparr_core::exactmath::format_vector;
use hyparr_core::expansion::{
    deletion_restriction_check, to_binomial_basis, verify_type_a_expansion,
    verify_type_b_expansion, zaslavsky_check, BasisKind, VerificationReport,
};
use hyparr_core::ffcount::{ff_oracle_check, POINT_LIMIT};
use hyparr_core::poset::char_poly;
use hyparr_core::regions::{enumerate_regions, LevelProfile};
use hyparr_core::{Arrangement, Polynomial, Scalar};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

/// Text and JSON forms of a command's result, plus the exit status.
#[derive(Clone, Debug, PartialEq)]
pub struct Output {
    pub text: String,
    pub json: Value,
    pub status: i32,
}

impl Output {
    fn pass(text: String, json: Value) -> Self {
        Self {
            text,
            json,
            status: EXIT_PASS,
        }
    }

    fn checked(text: String, json: Value, pass: bool) -> Self {
        Self {
            text,
            json,
            status: if pass { EXIT_PASS } else { EXIT_FAILURE },
        }
    }

    pub fn render(&self, as_json: bool) -> String {
        if as_json {
            let mut s = serde_json::to_string_pretty(&self.json).expect("json");
            s.push('\n');
            s
        } else {
            self.text.clone()
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Basis {
    Standard,
    Binomial,
    Half,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Theorem {
    #[value(name = "A")]
    A,
    #[value(name = "B")]
    B,
    Zaslavsky,
    DeletionRestriction,
    Ff,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    #[value(name = "cox_a")]
    CoxA,
    #[value(name = "cox_b")]
    CoxB,
    Catalan,
    Semiorder,
    #[value(name = "m_catalan")]
    MCatalan,
    #[value(name = "random_a")]
    RandomA,
    #[value(name = "random_b")]
    RandomB,
}

fn strings(values: &[Scalar]) -> Value {
    values.iter().map(|v| Value::String(v.to_string())).collect()
}

fn poly_json(p: &Polynomial) -> Value {
    json!({ "display": p.to_string(), "coefficients": strings(p.coeffs()) })
}

/// Left-aligned columns separated by two spaces.
fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let line = |cells: Vec<&str>| {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect();
        padded.join("  ").trim_end().to_string() + "\n"
    };
    let mut out = line(header.to_vec());
    for row in rows {
        out += &line(row.iter().map(String::as_str).collect());
    }
    out
}

fn verdict(pass: bool) -> &'static str {
    if pass {
        "pass"
    } else {
        "FAIL"
    }
}

pub fn chi(doc: &ArrangementDocument, basis: Basis) -> Output {
    let p = char_poly(&doc.arrangement);
    let mut text = format!("{p}\n");
    let mut out = json!({ "char_poly": poly_json(&p) });
    let kind = match basis {
        Basis::Standard => None,
        Basis::Binomial => Some((BasisKind::StandardBinomial, "binomial")),
        Basis::Half => Some((BasisKind::ShiftedHalf, "half")),
    };
    if let Some((kind, name)) = kind {
        let e = to_binomial_basis(&p, kind);
        text += &format!("{e}\n");
        out["expansion"] = json!({
            "basis": name,
            "display": e.to_string(),
            "coefficients": strings(&e.coeffs),
        });
    }
    Output::pass(text, out)
}

pub fn levels(doc: &ArrangementDocument, list_regions: bool) -> Output {
    let arr = &doc.arrangement;
    let regions = enumerate_regions(arr);
    let profile = LevelProfile::from_regions(arr.dim(), &regions);
    let mut rows: Vec<Vec<String>> = profile
        .counts()
        .iter()
        .enumerate()
        .map(|(k, c)| vec![k.to_string(), c.to_string()])
        .collect();
    rows.push(vec!["total".into(), profile.total().to_string()]);
    let mut text = table(&["level", "regions"], &rows);
    let mut out = json!({
        "ambient_dim": arr.dim(),
        "levels": profile.counts().iter().enumerate()
            .map(|(k, c)| json!({"level": k, "regions": c})).collect::<Vec<_>>(),
        "total": profile.total(),
    });
    if list_regions {
        let rows: Vec<Vec<String>> = regions
            .iter()
            .map(|r| vec![r.sign_string(), r.level.to_string(), format_vector(&r.witness)])
            .collect();
        text += "\n";
        text += &table(&["signs", "level", "witness"], &rows);
        out["regions"] = regions
            .iter()
            .map(|r| json!({"signs": r.sign_string(), "level": r.level, "witness": strings(&r.witness)}))
            .collect();
    }
    Output::pass(text, out)
}

fn expansion_output(name: &str, report: &VerificationReport) -> Output {
    let rows: Vec<Vec<String>> = report
        .rows
        .iter()
        .map(|r| {
            vec![
                r.k.to_string(),
                r.coefficient.to_string(),
                r.level_count.to_string(),
                r.expected.to_string(),
                verdict(r.pass).into(),
            ]
        })
        .collect();
    let pass = report.pass();
    let text = format!(
        "theorem {name}: coefficient of each basis term is (-1)^(n-k) r_k\nchi(t) = {}\nexpansion = {}\n{}result: {}\n",
        report.char_poly,
        report.expansion,
        table(&["k", "coefficient", "r_k", "expected", "result"], &rows),
        verdict(pass).to_uppercase()
    );
    let json = json!({
        "theorem": name,
        "char_poly": poly_json(&report.char_poly),
        "expansion": report.expansion.to_string(),
        "rows": report.rows.iter().map(|r| json!({
            "k": r.k,
            "coefficient": r.coefficient.to_string(),
            "level_count": r.level_count,
            "expected": r.expected.to_string(),
            "pass": r.pass,
        })).collect::<Vec<_>>(),
        "pass": pass,
    });
    Output::checked(text, json, pass)
}

pub fn verify(doc: &ArrangementDocument, theorem: Theorem, primes: usize) -> Result<Output, CliError> {
    let arr = &doc.arrangement;
    match theorem {
        Theorem::A => Ok(expansion_output("A", &verify_type_a_expansion(arr)?)),
        Theorem::B => Ok(expansion_output("B", &verify_type_b_expansion(arr)?)),
        Theorem::Zaslavsky => {
            let z = zaslavsky_check(arr);
            let text = format!(
                "zaslavsky: (-1)^n chi(-1) = {}, regions = {}\nresult: {}\n",
                z.signed_chi_at_minus_one,
                z.region_count,
                verdict(z.pass).to_uppercase()
            );
            let json = json!({
                "theorem": "zaslavsky",
                "signed_chi_at_minus_one": z.signed_chi_at_minus_one.to_string(),
                "region_count": z.region_count,
                "pass": z.pass,
            });
            Ok(Output::checked(text, json, z.pass))
        }
        Theorem::DeletionRestriction => {
            let rows = deletion_restriction_check(arr)?;
            let pass = rows.iter().all(|r| r.pass);
            let cells: Vec<Vec<String>> = rows
                .iter()
                .map(|r| {
                    vec![
                        doc.label(r.hyperplane),
                        r.deleted.to_string(),
                        r.restricted.to_string(),
                        verdict(r.pass).into(),
                    ]
                })
                .collect();
            let text = format!(
                "deletion-restriction: chi(t) = {}\n{}result: {}\n",
                char_poly(arr),
                table(&["hyperplane", "chi(A - H)", "chi(A^H)", "result"], &cells),
                verdict(pass).to_uppercase()
            );
            let json = json!({
                "theorem": "deletion-restriction",
                "char_poly": poly_json(&char_poly(arr)),
                "rows": rows.iter().map(|r| json!({
                    "hyperplane": doc.label(r.hyperplane),
                    "deleted": poly_json(&r.deleted),
                    "restricted": poly_json(&r.restricted),
                    "pass": r.pass,
                })).collect::<Vec<_>>(),
                "pass": pass,
            });
            Ok(Output::checked(text, json, pass))
        }
        Theorem::Ff => {
            let plan = ff_oracle_check(arr, primes)?;
            let pass = plan.all_agree();
            let cells: Vec<Vec<String>> = plan
                .checks
                .iter()
                .map(|c| {
                    vec![
                        c.q.to_string(),
                        c.count.to_string(),
                        c.expected.to_string(),
                        verdict(c.agrees).into(),
                    ]
                })
                .collect();
            let mut text = format!(
                "finite field: chi(t) = {}\ncoefficient bound: {}\n",
                char_poly(arr),
                plan.coefficient_bound
            );
            if !plan.skipped.is_empty() {
                let s: Vec<String> = plan.skipped.iter().map(u64::to_string).collect();
                text += &format!("skipped primes dividing a minor of [A|b]: {}\n", s.join(", "));
            }
            text += &table(&["q", "count", "chi(q)", "result"], &cells);
            if plan.is_partial() {
                text += &format!(
                    "partial: {} of {} primes fit under the limit of {POINT_LIMIT} points\n",
                    plan.checks.len(),
                    plan.requested
                );
            }
            text += &format!("result: {}\n", verdict(pass).to_uppercase());
            let json = json!({
                "theorem": "ff",
                "coefficient_bound": plan.coefficient_bound.to_string(),
                "requested": plan.requested,
                "skipped": plan.skipped,
                "partial": plan.is_partial(),
                "checks": plan.checks.iter().map(|c| json!({
                    "q": c.q, "count": c.count, "expected": c.expected.to_string(), "pass": c.agrees,
                })).collect::<Vec<_>>(),
                "pass": pass,
            });
            Ok(Output::checked(text, json, pass))
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GenerateParams {
    pub n: usize,
    pub m: Option<usize>,
    /// Catalan-type parameters, as rational strings.
    pub values: Vec<String>,
    pub seed: u64,
}

fn catalan_values(values: &[String]) -> Result<Vec<Scalar>, CliError> {
    let mut parsed = values
        .iter()
        .map(|v| parse_rational(v).map_err(|e| CliError::Input(format!("--values: {e}"))))
        .collect::<Result<Vec<_>, _>>()?;
    parsed.sort_by(|a, b| b.cmp(a));
    Ok(parsed)
}

pub fn generate(family: Family, params: &GenerateParams) -> Result<ArrangementDocument, CliError> {
    let n = params.n;
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let arr: Arrangement = match family {
        Family::CoxA => make_cox_a(n)?,
        Family::CoxB => make_cox_b(n)?,
        Family::Catalan => make_catalan_type(n, &catalan_values(&params.values)?, true)?,
        Family::Semiorder => make_catalan_type(n, &catalan_values(&params.values)?, false)?,
        Family::MCatalan => {
            let m = params
                .m
                .ok_or_else(|| CliError::Input("m_catalan needs --m".into()))?;
            if m == 0 {
                return Err(CliError::Input("--m must be at least 1".into()));
            }
            make_m_catalan(n, m)?
        }
        Family::RandomA => random_deformation_a(n, &RandomOffsets::default(), &mut rng)?,
        Family::RandomB => random_deformation_b(n, &RandomOffsets::default(), &mut rng)?,
    };
    Ok(ArrangementDocument::new(arr))
}

pub fn render(doc: &ArrangementDocument) -> Result<String, CliError> {
    render_svg(doc)
}
