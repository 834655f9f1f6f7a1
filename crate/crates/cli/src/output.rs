//! Serializable shapes of everything the CLI prints.

use serde::Serialize;

use monocurve::apery::AperyRowJson;
use monocurve::criteria::Criteria;
use monocurve::toric::IdealReport;
use monocurve::{AcmReport, Analysis, Sequence, StandardMonomials, VarNames};

#[derive(Serialize)]
pub struct Bases {
    pub a: IdealReport,
    pub dual: IdealReport,
    pub last_var: IdealReport,
    pub dual_last_var: IdealReport,
}

impl Bases {
    pub fn new(an: &Analysis) -> Self {
        let count = |s: &StandardMonomials| Some(s.len());
        Self {
            a: IdealReport::new(&an.gb, None),
            dual: IdealReport::new(&an.dual_gb, None),
            last_var: IdealReport::new(&an.last_var_gb, count(&an.standard)),
            dual_last_var: IdealReport::new(&an.dual_last_var_gb, count(&an.dual_standard)),
        }
    }
}

#[derive(Serialize)]
pub struct ReportJson {
    pub sequence: Sequence,
    pub verdict: bool,
    pub agree: bool,
    pub criteria: Criteria,
    pub witness: Option<String>,
    pub mu_ini: usize,
    pub bound_binom: u128,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bases: Option<Bases>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub apery: Option<Vec<AperyRowJson>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub frobenius: Option<i64>,
}

impl ReportJson {
    pub fn new(r: AcmReport) -> Self {
        Self {
            agree: r.criteria.all_agree(),
            sequence: r.sequence,
            verdict: r.verdict,
            criteria: r.criteria,
            witness: r.witness,
            mu_ini: r.mu_ini,
            bound_binom: r.bound_binom,
            bases: None,
            apery: None,
            frobenius: None,
        }
    }

    pub fn with_apery(mut self, an: &Analysis) -> Self {
        let names = VarNames::new(an.sequence.len(), false);
        self.apery = Some(an.apery.to_json(&names));
        self.frobenius = Some(an.apery.frobenius_number());
        self
    }

    pub fn verdict_word(&self) -> &'static str {
        if self.verdict {
            "ACM"
        } else {
            "not-ACM"
        }
    }

    /// One tab-separated line: sequence, verdict, then the ten criteria as 0/1.
    pub fn tsv_line(&self) -> String {
        let mut cols = vec![self.sequence.to_string(), self.verdict_word().to_string()];
        cols.extend(self.criteria.as_array().iter().map(|&(_, b)| u8::from(b).to_string()));
        cols.push(self.mu_ini.to_string());
        cols.push(self.bound_binom.to_string());
        cols.join("\t")
    }

    pub fn tsv_header() -> String {
        let mut cols = vec!["sequence".to_string(), "verdict".to_string()];
        cols.extend(Criteria::NAMES.iter().map(|s| s.to_string()));
        cols.push("mu_ini".into());
        cols.push("bound_binom".into());
        cols.join("\t")
    }

    pub fn text(&self) -> String {
        let crit: Vec<String> = self
            .criteria
            .as_array()
            .iter()
            .map(|(k, v)| format!("{k}={}", u8::from(*v)))
            .collect();
        let mut out = format!(
            "sequence  {}\nverdict   {}\ncriteria  {}\nwitness   {}\nmu_ini    {} (bound {})\n",
            self.sequence,
            self.verdict_word(),
            crit.join(" "),
            self.witness.as_deref().unwrap_or("-"),
            self.mu_ini,
            self.bound_binom
        );
        if let Some(b) = &self.bases {
            for (title, r) in [
                ("I(a)", &b.a),
                ("I(a')", &b.dual),
                ("(x_n, I(a))", &b.last_var),
                ("(x_n, I(a'))", &b.dual_last_var),
            ] {
                out.push_str(&format!("{title}\n"));
                for e in &r.gb.elements {
                    out.push_str(&format!("  {}\n", element_text(&e.lead, e.tail.as_deref())));
                }
            }
        }
        if let Some(rows) = &self.apery {
            out.push_str("residue\tnu\tmu\tphi\tdual_deg\tin_dual_apery\n");
            for r in rows {
                out.push_str(&format!(
                    "{}\t{}\t{}\t{}\t{}\t{}\n",
                    r.residue, r.nu, r.mu, r.phi, r.dual_deg, r.in_dual_apery
                ));
            }
        }
        out
    }
}

pub fn element_text(lead: &str, tail: Option<&str>) -> String {
    match tail {
        Some(t) => format!("{lead} - {t}"),
        None => lead.to_string(),
    }
}

#[derive(Serialize)]
pub struct FamilyLine {
    pub family: String,
    pub parameter: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gb_size: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected_verdict: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected_gb_matches: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub report: Option<ReportJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Serialize)]
pub struct ErrorLine {
    pub sequence: String,
    pub error: String,
}

#[derive(Serialize)]
pub struct Summary {
    pub instances: usize,
    pub acm: usize,
    pub not_acm: usize,
    pub errors: usize,
    pub inconsistencies: usize,
    pub acm_ratio: f64,
}

#[derive(Serialize)]
pub struct SummaryLine {
    pub summary: Summary,
}
