//! Report types and text rendering shared by the `nakayama-sms` binary
//! and its integration tests.
//!
//! The JSON layer is contractual: reports serialize with a fixed field
//! order and canonically sorted contents, so parsing a report and
//! re-serializing it is byte-identical. The human text output is stable
//! but not contractual.

use serde::{Deserialize, Serialize};

use nakayama_sms::noncrossing::NonCrossingPartition;
use nakayama_sms::sms::{FamilyKind, FamilyLabel, SmsCandidate};
use nakayama_sms::verifier::ClassificationReport;
use nakayama_sms::Algebra;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraJson {
    pub n: u32,
    pub ell: u32,
    pub e: u32,
}

impl From<&Algebra> for AlgebraJson {
    fn from(a: &Algebra) -> Self {
        AlgebraJson { n: a.n(), ell: a.ell(), e: a.e() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabelJson {
    #[serde(rename = "type")]
    pub kind: String,
    pub partition: String,
    pub k: u32,
}

impl From<&FamilyLabel> for LabelJson {
    fn from(l: &FamilyLabel) -> Self {
        LabelJson {
            kind: match l.kind {
                FamilyKind::Long => "long".into(),
                FamilyKind::Short => "short".into(),
            },
            partition: l.partition.to_string(),
            k: l.k,
        }
    }
}

impl LabelJson {
    pub fn to_label(&self) -> Result<FamilyLabel, nakayama_sms::Error> {
        let kind = match self.kind.as_str() {
            "long" => FamilyKind::Long,
            "short" => FamilyKind::Short,
            other => {
                return Err(nakayama_sms::Error::Parse(format!("unknown family type {other}")))
            }
        };
        let partition: NonCrossingPartition = self.partition.parse()?;
        Ok(FamilyLabel::new(kind, partition, self.k))
    }
}

pub fn module_strings(s: &SmsCandidate) -> Vec<String> {
    s.modules().iter().map(|m| m.to_string()).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NcpReport {
    pub e: u32,
    pub count: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub partitions: Option<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyReport {
    pub algebra: AlgebraJson,
    pub label: LabelJson,
    pub modules: Vec<String>,
    pub is_sms: bool,
}

impl FamilyReport {
    pub fn render_text(&self) -> String {
        let mut out = format!(
            "{}[p={},k={}]\n",
            if self.label.kind == "long" { 'L' } else { 'S' },
            self.label.partition,
            self.label.k
        );
        for m in &self.modules {
            out.push_str("  ");
            out.push_str(m);
            out.push('\n');
        }
        out.push_str(&format!("is_sms: {}\n", self.is_sms));
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SyzygyReport {
    pub algebra: AlgebraJson,
    pub input: LabelJson,
    pub power: i64,
    pub label: LabelJson,
    pub modules: Vec<String>,
    pub label_matches: bool,
}

impl SyzygyReport {
    pub fn render_text(&self) -> String {
        let mut out = format!(
            "Omega^{} of {}[p={},k={}]:\n",
            self.power,
            if self.input.kind == "long" { 'L' } else { 'S' },
            self.input.partition,
            self.input.k
        );
        out.push_str(&format!(
            "{}[p={},k={}]\n",
            if self.label.kind == "long" { 'L' } else { 'S' },
            self.label.partition,
            self.label.k
        ));
        for m in &self.modules {
            out.push_str("  ");
            out.push_str(m);
            out.push('\n');
        }
        out.push_str(&format!("label_matches: {}\n", self.label_matches));
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassJson {
    pub modules: Vec<String>,
    pub labels: Vec<LabelJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerationReport {
    pub algebra: AlgebraJson,
    pub count_formula: u64,
    pub count_enumerated: u64,
    pub complete: bool,
    pub classes: Vec<ClassJson>,
}

impl From<&ClassificationReport> for EnumerationReport {
    fn from(r: &ClassificationReport) -> Self {
        EnumerationReport {
            algebra: AlgebraJson::from(&r.algebra),
            count_formula: r.count_formula,
            count_enumerated: r.count_enumerated,
            complete: r.is_complete(),
            classes: r
                .classes
                .iter()
                .map(|c| ClassJson {
                    modules: module_strings(&c.sms),
                    labels: c.labels.iter().map(LabelJson::from).collect(),
                })
                .collect(),
        }
    }
}

impl EnumerationReport {
    pub fn render_text(&self) -> String {
        let mut out = format!(
            "algebra: A_{}^{} (e={})\ncount: {} enumerated / {} formula\n",
            self.algebra.n,
            self.algebra.ell,
            self.algebra.e,
            self.count_enumerated,
            self.count_formula
        );
        for (i, class) in self.classes.iter().enumerate() {
            let labels: Vec<String> = class
                .labels
                .iter()
                .map(|l| {
                    format!(
                        "{}[p={},k={}]",
                        if l.kind == "long" { 'L' } else { 'S' },
                        l.partition,
                        l.k
                    )
                })
                .collect();
            out.push_str(&format!("class {}: {}\n", i + 1, labels.join(" = ")));
            for m in &class.modules {
                out.push_str("  ");
                out.push_str(m);
                out.push('\n');
            }
        }
        out.push_str(&format!("complete: {}\n", self.complete));
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BrauerTreeJson {
    pub edges: u32,
    pub multiplicity: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountReport {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub algebra: Option<AlgebraJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub brauer_tree: Option<BrauerTreeJson>,
    pub count: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleCheckReport {
    pub max_n: u32,
    pub max_ell: u32,
    pub primes: Vec<u64>,
    pub hom_pairs: u64,
    pub stable_pairs: u64,
    pub arc_pairs: u64,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

impl OracleCheckReport {
    pub fn render_text(&self) -> String {
        let mut out = format!(
            "hom/stable sweep over primes {:?}: {} hom pairs, {} stable pairs\n\
             arc sweep: {} pairs\n",
            self.primes, self.hom_pairs, self.stable_pairs, self.arc_pairs
        );
        match &self.counterexample {
            None => out.push_str("oracle-check: PASS\n"),
            Some(cx) => out.push_str(&format!("oracle-check: FAIL\ncounterexample: {cx}\n")),
        }
        out
    }
}
