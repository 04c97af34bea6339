//! Report structures with text, JSON and CSV renderings.

use std::fmt::Write;

use serde::Serialize;
use stratih_core::euler::StratumwiseReport;
use stratih_core::hopf::{ConverseDecision, PHReport, Verdict};
use stratih_core::{Perversity, StratifiedSpace};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Serialize)]
pub struct Header {
    pub space: String,
    pub dimension: usize,
    pub perversity: String,
    /// `p_2, ..., p_n`.
    pub perversity_values: Vec<i64>,
    pub subdivisions: usize,
}

impl Header {
    pub fn new(space: &StratifiedSpace, p: &Perversity, subdivisions: usize) -> Header {
        Header {
            space: space.name().to_string(),
            dimension: space.n(),
            perversity: p.spelling(),
            perversity_values: p.values().to_vec(),
            subdivisions,
        }
    }

    fn text(&self) -> String {
        format!(
            "space: {} (dimension {})\nperversity: {} {:?}\nsubdivisions: {}\n",
            self.space, self.dimension, self.perversity, self.perversity_values, self.subdivisions
        )
    }
}

fn json<T: Serialize>(value: &T) -> String {
    let mut out = serde_json::to_string_pretty(value).expect("serializable");
    out.push('\n');
    out
}

fn list(values: &[usize]) -> String {
    if values.is_empty() {
        return "-".into();
    }
    let parts: Vec<String> = values.iter().map(|v| v.to_string()).collect();
    format!("({})", parts.join(","))
}

#[derive(Debug, Clone, Serialize)]
pub struct DegreeDim {
    pub degree: usize,
    pub dim: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct IhReport {
    #[serde(flatten)]
    pub header: Header,
    pub dims: Vec<DegreeDim>,
    pub euler: i64,
}

impl IhReport {
    pub fn new(header: Header, dims: &[usize], euler: i64) -> IhReport {
        IhReport { header, dims: dims.iter().enumerate().map(|(degree, &dim)| DegreeDim { degree, dim }).collect(), euler }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => json(self),
            Format::Csv => {
                let mut out = String::from("degree,dim\n");
                for d in &self.dims {
                    writeln!(out, "{},{}", d.degree, d.dim).unwrap();
                }
                out
            }
            Format::Text => {
                let row: Vec<String> = self.dims.iter().map(|d| format!("i={}:{}", d.degree, d.dim)).collect();
                format!("{}{}\neuler: {}\n", self.header.text(), row.join(", "), self.euler)
            }
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct TermRow {
    pub stratum: u32,
    pub component: usize,
    pub dim: usize,
    pub chi_c: i64,
    pub link_ih: Vec<usize>,
    pub inner: i64,
    pub contribution: i64,
}

#[derive(Debug, Clone, Serialize)]
pub struct ChiReport {
    #[serde(flatten)]
    pub header: Header,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub direct: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub stratumwise: Option<i64>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub terms: Vec<TermRow>,
    /// Present when both methods ran.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub agree: Option<bool>,
}

impl ChiReport {
    pub fn new(header: Header, direct: Option<i64>, stratumwise: Option<&StratumwiseReport>) -> ChiReport {
        let terms = stratumwise
            .map(|r| {
                r.terms
                    .iter()
                    .map(|t| TermRow {
                        stratum: t.component.stratum,
                        component: t.component.component,
                        dim: t.dim,
                        chi_c: t.chi_c,
                        link_ih: t.link_ih.clone(),
                        inner: t.inner,
                        contribution: t.contribution,
                    })
                    .collect()
            })
            .unwrap_or_default();
        let total = stratumwise.map(|r| r.total);
        let agree = match (direct, total) {
            (Some(a), Some(b)) => Some(a == b),
            _ => None,
        };
        ChiReport { header, direct, stratumwise: total, terms, agree }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => json(self),
            Format::Csv => {
                let mut out = String::from("method,ichi\n");
                if let Some(d) = self.direct {
                    writeln!(out, "direct,{d}").unwrap();
                }
                if let Some(s) = self.stratumwise {
                    writeln!(out, "stratumwise,{s}").unwrap();
                }
                out
            }
            Format::Text => {
                let mut out = self.header.text();
                if let Some(d) = self.direct {
                    writeln!(out, "direct: {d}").unwrap();
                }
                if let Some(s) = self.stratumwise {
                    writeln!(out, "stratumwise: {s}").unwrap();
                    for t in &self.terms {
                        writeln!(
                            out,
                            "  stratum {} component {} (dim {}): chi_c {}, link IH {}, inner {}, contribution {}",
                            t.stratum,
                            t.component,
                            t.dim,
                            t.chi_c,
                            list(&t.link_ih),
                            t.inner,
                            t.contribution
                        )
                        .unwrap();
                    }
                }
                if let Some(a) = self.agree {
                    writeln!(out, "{}", if a { "methods agree" } else { "METHODS DISAGREE" }).unwrap();
                }
                out
            }
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct MultiplicityRow {
    pub stratum: u32,
    pub component: usize,
    pub dim: usize,
    pub chi_c: i64,
    pub link_ih: Vec<usize>,
    pub multiplicity: i64,
}

#[derive(Debug, Clone, Serialize)]
pub struct MultiplicityReport {
    #[serde(flatten)]
    pub header: Header,
    pub rows: Vec<MultiplicityRow>,
}

impl MultiplicityReport {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => json(self),
            Format::Csv => {
                let mut out = String::from("stratum,component,dim,chi_c,multiplicity\n");
                for r in &self.rows {
                    writeln!(out, "{},{},{},{},{}", r.stratum, r.component, r.dim, r.chi_c, r.multiplicity).unwrap();
                }
                out
            }
            Format::Text => {
                let mut out = self.header.text();
                for r in &self.rows {
                    writeln!(
                        out,
                        "stratum {} component {} (dim {}, chi_c {}, link IH {}): multiplicity {}",
                        r.stratum,
                        r.component,
                        r.dim,
                        r.chi_c,
                        list(&r.link_ih),
                        r.multiplicity
                    )
                    .unwrap();
                }
                out
            }
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct PhRow {
    pub stratum: u32,
    pub component: usize,
    pub label: String,
    pub chi_c: i64,
    pub multiplicity: i64,
    pub index: i64,
    pub singular_index: i64,
}

#[derive(Debug, Clone, Serialize)]
pub struct PhReportOut {
    #[serde(flatten)]
    pub header: Header,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub field_class: Option<String>,
    pub rows: Vec<PhRow>,
    pub sum: i64,
    pub ichi: i64,
    /// `chains` or `stratumwise`.
    pub ichi_source: &'static str,
    pub verdict: &'static str,
    /// `sum - ichi`.
    pub difference: i64,
}

impl PhReportOut {
    pub fn new(header: Header, field_class: Option<String>, report: &PHReport, ichi_source: &'static str) -> PhReportOut {
        let rows = report
            .rows
            .iter()
            .map(|r| PhRow {
                stratum: r.zero.component.stratum,
                component: r.zero.component.component,
                label: r.zero.label.clone(),
                chi_c: r.chi_c,
                multiplicity: r.multiplicity,
                index: r.zero.index,
                singular_index: r.singular_index,
            })
            .collect();
        let (verdict, difference) = match report.verdict {
            Verdict::Equal => ("equal", 0),
            Verdict::Mismatch { difference } => ("mismatch", difference),
        };
        PhReportOut { header, field_class, rows, sum: report.sum, ichi: report.ichi, ichi_source, verdict, difference }
    }

    pub fn equal(&self) -> bool {
        self.verdict == "equal"
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => json(self),
            Format::Csv => {
                let mut out = String::from("stratum,component,chi_c,multiplicity,index,singular_index\n");
                for r in &self.rows {
                    writeln!(
                        out,
                        "{},{},{},{},{},{}",
                        r.stratum, r.component, r.chi_c, r.multiplicity, r.index, r.singular_index
                    )
                    .unwrap();
                }
                out
            }
            Format::Text => {
                let mut out = self.header.text();
                if let Some(c) = &self.field_class {
                    writeln!(out, "field class: {c}").unwrap();
                }
                for r in &self.rows {
                    writeln!(
                        out,
                        "zero {:?} on stratum {} component {}: chi_c {}, multiplicity {}, index {}, singular index {}",
                        r.label, r.stratum, r.component, r.chi_c, r.multiplicity, r.index, r.singular_index
                    )
                    .unwrap();
                }
                writeln!(out, "sum of singular indices: {}", self.sum).unwrap();
                writeln!(out, "Ichi ({}): {}", self.ichi_source, self.ichi).unwrap();
                match self.verdict {
                    "equal" => writeln!(out, "verdict: equal").unwrap(),
                    _ => writeln!(out, "verdict: mismatch (difference {})", self.difference).unwrap(),
                }
                out
            }
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ComponentRow {
    pub stratum: u32,
    pub name: String,
    pub component: usize,
    pub dim: usize,
    pub chi_c: i64,
}

#[derive(Debug, Clone, Serialize)]
pub struct ConverseReport {
    pub space: String,
    pub dimension: usize,
    pub exists: bool,
    pub components: Vec<ComponentRow>,
    pub witnesses: Vec<ComponentRow>,
}

impl ConverseReport {
    pub fn new(space: &StratifiedSpace, decision: &ConverseDecision) -> ConverseReport {
        let rows = |list: &[stratih_core::hopf::ComponentChi]| {
            list.iter()
                .map(|c| ComponentRow {
                    stratum: c.component.stratum,
                    name: space.stratum(c.component.stratum).map(|s| s.name.clone()).unwrap_or_default(),
                    component: c.component.component,
                    dim: c.dim,
                    chi_c: c.chi_c,
                })
                .collect()
        };
        ConverseReport {
            space: space.name().to_string(),
            dimension: space.n(),
            exists: decision.exists,
            components: rows(&decision.components),
            witnesses: rows(&decision.witnesses),
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => json(self),
            Format::Csv => {
                let mut out = String::from("stratum,name,component,dim,chi_c,witness\n");
                for r in &self.components {
                    writeln!(out, "{},{},{},{},{},{}", r.stratum, r.name, r.component, r.dim, r.chi_c, r.chi_c != 0).unwrap();
                }
                out
            }
            Format::Text => {
                let mut out = format!("space: {} (dimension {})\n", self.space, self.dimension);
                for r in &self.components {
                    writeln!(
                        out,
                        "stratum {} ({}) component {} (dim {}): chi_c {}",
                        r.stratum, r.name, r.component, r.dim, r.chi_c
                    )
                    .unwrap();
                }
                if self.exists {
                    writeln!(out, "a nonsingular totally radial field exists").unwrap();
                } else {
                    writeln!(out, "no nonsingular totally radial field; witnesses:").unwrap();
                    for r in &self.witnesses {
                        writeln!(out, "  stratum {} ({}) component {}: chi_c {}", r.stratum, r.name, r.component, r.chi_c)
                            .unwrap();
                    }
                }
                out
            }
        }
    }
}
