//! Serializable report documents (the machine format, one JSON document
//! per invocation with a schema version) and the plain aligned-table
//! renderer for the human format.

use serde::{Deserialize, Serialize};

use ribbonlab_core::invariants::{CompleteType, RibbonInvariants};
use ribbonlab_core::semistability::SSVerdict;
use ribbonlab_core::strata::trichotomy_class;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RibbonDoc {
    pub gbar: i64,
    pub delta: i64,
    pub genus: i64,
    pub class: String,
}

impl RibbonDoc {
    pub fn new(inv: RibbonInvariants) -> Self {
        Self {
            gbar: inv.gbar(),
            delta: inv.delta(),
            genus: inv.genus(),
            class: trichotomy_class(inv).as_str().to_string(),
        }
    }

    pub fn heading(&self) -> String {
        format!(
            "ribbon: gbar={} delta={} genus={} class={}",
            self.gbar, self.delta, self.genus, self.class
        )
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TypeDoc {
    pub r0: i64,
    pub r1: i64,
    pub d0: i64,
    pub d1: i64,
}

impl TypeDoc {
    pub fn new(t: CompleteType) -> Self {
        Self {
            r0: t.r0(),
            r1: t.r1(),
            d0: t.d0(),
            d1: t.d1(),
        }
    }

    pub fn display(&self) -> String {
        format!("({},{};{},{})", self.r0, self.r1, self.d0, self.d1)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerdictDoc {
    pub status: String,
    pub reason: String,
}

impl VerdictDoc {
    pub fn new(v: SSVerdict) -> Self {
        Self {
            status: v.status.as_str().to_string(),
            reason: v.reason.to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WindowDoc {
    pub min: i64,
    pub max: i64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StratumDoc {
    #[serde(rename = "type")]
    pub complete_type: TypeDoc,
    pub dimension: i64,
    pub rigid: bool,
    pub component: bool,
    pub semistable: VerdictDoc,
    pub stable: VerdictDoc,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StrataDoc {
    pub schema_version: u32,
    pub command: String,
    pub ribbon: RibbonDoc,
    pub rank: i64,
    pub degree: i64,
    pub d1_window: WindowDoc,
    pub moduli_dimension: i64,
    pub strata: Vec<StratumDoc>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SsStratumDoc {
    #[serde(rename = "type")]
    pub complete_type: TypeDoc,
    pub verdict: VerdictDoc,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SsDoc {
    pub schema_version: u32,
    pub command: String,
    pub ribbon: RibbonDoc,
    pub rank: i64,
    pub degree: i64,
    pub stable: bool,
    pub strata: Vec<SsStratumDoc>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InvariantsDoc {
    pub schema_version: u32,
    pub command: String,
    pub ribbon: RibbonDoc,
    #[serde(rename = "type")]
    pub complete_type: TypeDoc,
    pub rank: i64,
    pub degree: i64,
    pub slope: String,
    pub admissible: bool,
    pub rigid: bool,
    pub dimension: Option<i64>,
    pub component: Option<bool>,
    pub euler_characteristic: i64,
    pub hilbert_constant: i64,
    pub hilbert_linear: i64,
    pub d_pol: i64,
    pub dual_rank: i64,
    pub dual_degree: i64,
    pub iota_input: i64,
    pub second_filtration: (i64, i64),
    pub index: Option<i64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PointDoc {
    pub name: String,
    pub n: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EndDoc {
    #[serde(rename = "type")]
    pub complete_type: TypeDoc,
    pub rank: i64,
    pub degree: i64,
    pub euler_characteristic: i64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TangentDoc {
    pub schema_version: u32,
    pub command: String,
    pub ribbon: RibbonDoc,
    #[serde(rename = "type")]
    pub complete_type: TypeDoc,
    pub points: Vec<PointDoc>,
    pub iota: i64,
    pub gamma: i64,
    pub coker_beta_length: i64,
    pub end: EndDoc,
    pub tangent_codim_local: i64,
    pub tangent_codim_full: i64,
    pub h0_term: i64,
    pub ext_torsion_length: i64,
    pub ext_reflexive_rank: i64,
    pub ext_reflexive_slope: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MismatchDoc {
    pub entry: String,
    pub computed: String,
    pub expected: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LocalextDoc {
    pub schema_version: u32,
    pub command: String,
    pub p: u64,
    pub truncation: usize,
    pub n_max: usize,
    pub ext_checked: usize,
    pub ext_matched: usize,
    pub coker_checked: usize,
    pub coker_matched: usize,
    pub mismatches: Vec<MismatchDoc>,
    pub all_match: bool,
}

/// The on-disk profile document consumed by `tangent`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProfileDocument {
    pub ribbon: ProfileRibbonDoc,
    #[serde(rename = "type")]
    pub complete_type: TypeDoc,
    pub points: Vec<PointDoc>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProfileRibbonDoc {
    pub gbar: i64,
    pub delta: i64,
}

/// Renders a plain aligned table: left-aligned columns separated by two
/// spaces, no trailing whitespace.
pub fn render_table(headers: &[&str], rows: &[Vec<String>]) -> String {
    let cols = headers.len();
    let mut widths: Vec<usize> = headers.iter().map(|h| h.len()).collect();
    for row in rows {
        for (j, cell) in row.iter().enumerate() {
            widths[j] = widths[j].max(cell.len());
        }
    }
    let mut out = String::new();
    let push_row = |cells: Vec<String>, out: &mut String| {
        let mut line = String::new();
        for (j, cell) in cells.iter().enumerate() {
            if j > 0 {
                line.push_str("  ");
            }
            line.push_str(cell);
            if j + 1 < cols {
                for _ in cell.len()..widths[j] {
                    line.push(' ');
                }
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    };
    push_row(headers.iter().map(|h| h.to_string()).collect(), &mut out);
    for row in rows {
        push_row(row.clone(), &mut out);
    }
    out
}

pub fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}
