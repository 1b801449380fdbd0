use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::Duration;

use antf_core::graphs::GraphVerdict;
use antf_core::simplicial::ComplexVerdict;
use antf_core::tspread::TspreadVerdict;
use antf_core::{Classification, MonomialPrime, PowersVerdict, PrimeSet};
use serde::Serialize;

use crate::{Command, Theorem};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Status {
    Ok,
    Mismatch,
    BudgetExhausted,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Ok => "OK",
            Status::Mismatch => "MISMATCH",
            Status::BudgetExhausted => "BUDGET_EXHAUSTED",
        }
    }

    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::Mismatch => 1,
            Status::BudgetExhausted => 3,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct InputEcho {
    pub kind: &'static str,
    /// The input re-serialized in canonical form.
    pub text: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct AssTable {
    pub min_primes: PrimeSet,
    /// `Ass(I^k)` keyed by `k`; keys become strings in JSON.
    pub powers: BTreeMap<u32, PrimeSet>,
    pub verdict: PowersVerdict,
    /// Computed component by component and combined.
    pub composite: bool,
    pub budget_exhausted_at: Option<u32>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ComponentVerdict {
    pub vertices: Vec<usize>,
    pub verdict: GraphVerdict,
}

#[derive(Debug, Clone, Serialize)]
pub struct CompositeVerdict {
    /// Always `ORACLE_ONLY`: nothing is claimed for disconnected graphs.
    pub classification: Classification,
    pub components: Vec<ComponentVerdict>,
    pub isolated_vertices: Vec<usize>,
}

#[derive(Debug, Clone, Serialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum ClassificationReport {
    Graph(GraphVerdict),
    Composite(CompositeVerdict),
    Complex(ComplexVerdict),
    Tspread(TspreadVerdict),
}

impl ClassificationReport {
    pub fn classification(&self) -> Classification {
        match self {
            ClassificationReport::Graph(v) => v.classification,
            ClassificationReport::Composite(v) => v.classification,
            ClassificationReport::Complex(v) => v.classification,
            ClassificationReport::Tspread(v) => v.classification,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum CheckStatus {
    Match,
    Mismatch,
    /// The predicted set strictly contains the oracle's.
    Superset,
    /// No closed form applies at this power.
    Unpredicted,
    /// A predicted obstruction did not show up within the computed powers.
    NotObserved,
}

#[derive(Debug, Clone, Serialize)]
pub struct PowerCheck {
    pub status: CheckStatus,
    pub predicted: Option<PrimeSet>,
    /// Predicted but absent from the oracle.
    pub missing: Vec<MonomialPrime>,
    /// Found by the oracle but not predicted.
    pub unexpected: Vec<MonomialPrime>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CandidateCheck {
    pub status: CheckStatus,
    pub candidates: PrimeSet,
    /// Candidates the oracle did not find in `Ass(I)`.
    pub unrealized: Vec<MonomialPrime>,
    /// Oracle primes outside the candidates.
    pub unexpected: Vec<MonomialPrime>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ObstructionCheck {
    pub status: CheckStatus,
    pub primes: Vec<MonomialPrime>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Verification {
    pub theorem: Theorem,
    pub powers: BTreeMap<u32, PowerCheck>,
    pub candidates: Option<CandidateCheck>,
    pub obstruction: Option<ObstructionCheck>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ReesReport {
    pub rees_generated: bool,
    pub classification: Classification,
    /// Rees generation should hold exactly when the graph is not NOT_ANTF.
    pub status: CheckStatus,
    /// Indecomposable covers of order 1 coincide with minimal vertex covers.
    pub order_one_covers: CheckStatus,
    pub minimal_vertex_covers: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub command: Command,
    pub input: InputEcho,
    pub kmax: u32,
    pub classification: Option<ClassificationReport>,
    pub ass: Option<AssTable>,
    pub verification: Option<Verification>,
    pub oracle_compare: Option<BTreeMap<u32, CheckStatus>>,
    pub rees: Option<ReesReport>,
    pub budget_exhausted: bool,
    pub status: Status,
    /// Wall-clock time; kept out of JSON so reruns diff cleanly.
    #[serde(skip)]
    pub elapsed: Duration,
}

impl Report {
    pub(crate) fn new(command: Command, input: InputEcho, kmax: u32) -> Self {
        Self {
            command,
            input,
            kmax,
            classification: None,
            ass: None,
            verification: None,
            oracle_compare: None,
            rees: None,
            budget_exhausted: false,
            status: Status::Ok,
            elapsed: Duration::ZERO,
        }
    }

    /// Sets `status` from the collected checks.
    pub(crate) fn settle(&mut self) {
        let mut statuses: Vec<CheckStatus> = Vec::new();
        if let Some(v) = &self.verification {
            statuses.extend(v.powers.values().map(|p| p.status));
            statuses.extend(v.candidates.iter().map(|c| c.status));
            statuses.extend(v.obstruction.iter().map(|o| o.status));
        }
        if let Some(o) = &self.oracle_compare {
            statuses.extend(o.values().copied());
        }
        if let Some(r) = &self.rees {
            statuses.push(r.status);
            statuses.push(r.order_one_covers);
        }
        if let Some(a) = &self.ass {
            self.budget_exhausted |= a.budget_exhausted_at.is_some();
        }
        self.status = if statuses.contains(&CheckStatus::Mismatch) {
            Status::Mismatch
        } else if self.budget_exhausted {
            Status::BudgetExhausted
        } else {
            Status::Ok
        };
    }
}

fn primes(set: &PrimeSet) -> String {
    let parts: Vec<String> = set.iter().map(ToString::to_string).collect();
    format!("{{{}}}", parts.join(", "))
}

fn prime_list(list: &[MonomialPrime]) -> String {
    let parts: Vec<String> = list.iter().map(ToString::to_string).collect();
    parts.join(", ")
}

fn status_word(s: CheckStatus) -> &'static str {
    match s {
        CheckStatus::Match => "MATCH",
        CheckStatus::Mismatch => "MISMATCH",
        CheckStatus::Superset => "SUPERSET",
        CheckStatus::Unpredicted => "UNPREDICTED",
        CheckStatus::NotObserved => "NOT_OBSERVED",
    }
}

fn render_classification(out: &mut String, c: &ClassificationReport) {
    let _ = writeln!(out, "classification: {}", c.classification());
    match c {
        ClassificationReport::Graph(v) => {
            if let Some(k) = v.k_index {
                let _ = writeln!(out, "  k = {k} (odd girth {})", v.odd_girth.unwrap_or(0));
            }
            if let (Some(cycle), Some(closure)) = (&v.failing_cycle, &v.failing_closure) {
                let _ = writeln!(out, "  failing cycle {cycle} with closure {closure:?}");
            }
        }
        ClassificationReport::Composite(v) => {
            for comp in &v.components {
                let _ = writeln!(
                    out,
                    "  component {:?}: {}",
                    comp.vertices, comp.verdict.classification
                );
            }
            if !v.isolated_vertices.is_empty() {
                let _ = writeln!(out, "  isolated vertices {:?}", v.isolated_vertices);
            }
        }
        ClassificationReport::Complex(v) => {
            if let Some(cycle) = &v.special_odd_cycle {
                let _ = writeln!(out, "  special odd cycle: {cycle}");
            }
            if let (Some(k), Some(p)) = (v.k_index, &v.extra_prime) {
                let _ = writeln!(out, "  k = {k}, extra prime {p}");
            }
        }
        ClassificationReport::Tspread(v) => {
            let norm = &v.normalized;
            if norm.spec != v.spec {
                let _ = writeln!(
                    out,
                    "  normalized to {} (variables {:?}, exact: {})",
                    norm.spec, norm.variable_map, norm.exact
                );
            }
            if let Some(k) = v.k_index {
                let _ = writeln!(out, "  k = {k}");
            }
            if let Some(p) = &v.extra_prime {
                let _ = writeln!(out, "  extra prime {p}");
            }
            if !v.obstruction_primes.is_empty() {
                let _ = writeln!(out, "  obstruction primes {}", prime_list(&v.obstruction_primes));
            }
        }
    }
}

pub(crate) fn render_text(r: &Report) -> String {
    let mut out = String::new();
    let _ = write!(out, "{}", r.input.text);
    if let Some(c) = &r.classification {
        render_classification(&mut out, c);
    }
    if let Some(a) = &r.ass {
        let _ = writeln!(out, "Min ({}): {}", a.min_primes.len(), primes(&a.min_primes));
        for (k, set) in &a.powers {
            let _ = writeln!(out, "Ass(I^{k}) ({}): {}", set.len(), primes(set));
        }
        if let Some(k) = a.budget_exhausted_at {
            let _ = writeln!(out, "budget exhausted at power {k}");
        }
        let _ = writeln!(out, "observed: {}", describe_verdict(&a.verdict));
    }
    if let Some(v) = &r.verification {
        if let Some(c) = &v.candidates {
            let _ = writeln!(
                out,
                "candidate primes ({}): {}",
                c.candidates.len(),
                status_word(c.status)
            );
        }
        for (k, check) in &v.powers {
            let _ = write!(out, "power {k}: {}", status_word(check.status));
            if !check.missing.is_empty() {
                let _ = write!(out, "; missing {}", prime_list(&check.missing));
            }
            if !check.unexpected.is_empty() {
                let _ = write!(out, "; unexpected {}", prime_list(&check.unexpected));
            }
            out.push('\n');
        }
        if let Some(o) = &v.obstruction {
            let _ = writeln!(
                out,
                "obstruction {}: {}",
                prime_list(&o.primes),
                status_word(o.status)
            );
        }
    }
    if let Some(o) = &r.oracle_compare {
        for (k, s) in o {
            let _ = writeln!(out, "oracles agree on power {k}: {}", status_word(*s));
        }
    }
    if let Some(rees) = &r.rees {
        let _ = writeln!(
            out,
            "Rees algebra generated in degree <= 2: {} ({}): {}",
            rees.rees_generated,
            rees.classification,
            status_word(rees.status)
        );
        let _ = writeln!(
            out,
            "order-1 indecomposable covers = minimal vertex covers: {}",
            status_word(rees.order_one_covers)
        );
    }
    let _ = writeln!(
        out,
        "status: {} ({:.3}s)",
        r.status.as_str(),
        r.elapsed.as_secs_f64()
    );
    out
}

fn describe_verdict(v: &PowersVerdict) -> String {
    match v {
        PowersVerdict::NtfUpToKmax { kmax } => format!("Ass(I^k) = Min for k <= {kmax}"),
        PowersVerdict::AntfConsistent { k, prime } => {
            format!("Ass(I^k) = Min for k <= {k}, then Min + {prime}")
        }
        PowersVerdict::Neither {
            power,
            extra_primes,
        } => format!(
            "neither NTF nor ANTF by power {power}; extra primes {}",
            prime_list(extra_primes)
        ),
        PowersVerdict::Undetermined => "undetermined".into(),
    }
}
