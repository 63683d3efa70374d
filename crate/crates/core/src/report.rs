//! Analysis report combining every invariant that applies to an input.

use std::fmt::{self, Write as _};

use serde::{Deserialize, Serialize};

use crate::cone::cone_classify;
use crate::error::Result;
use crate::flag::{
    complexity, delta0, euler_check, fatness, flag_vector, four_flag, inequality_report, Delta0,
    FVector, FourFlag, InequalityReport,
};
use crate::lattice::{face_type_flags, hierarchy_report, FaceLattice, FaceTypeFlags, HierarchyReport};
use crate::rational::{decimal, exact, Rational};

/// Exact value with its 6-significant-digit rendering.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Value {
    pub exact: String,
    pub decimal: String,
}

impl From<&Rational> for Value {
    fn from(r: &Rational) -> Self {
        Value {
            exact: exact(r),
            decimal: decimal(r, 6),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConeSummary {
    pub phi0: Option<Value>,
    pub phi3: Option<Value>,
    pub inside: bool,
    pub satisfied: Vec<String>,
    pub tight: Vec<String>,
    pub degenerate: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub input: String,
    pub f_vector: Vec<serde_json::Number>,
    pub euler: bool,
    pub four_flag: Option<String>,
    pub fatness: Option<Value>,
    pub complexity: Option<Value>,
    pub delta0_vertex: Option<Value>,
    pub delta0_facet: Option<Value>,
    pub cone: Option<ConeSummary>,
    pub inequalities: Option<InequalityReport>,
    pub hierarchy: Option<HierarchyReport>,
    pub face_types: Option<FaceTypeFlags>,
    /// Quantities that could not be evaluated, with the reason.
    pub notes: Vec<String>,
}

fn number(x: &num_bigint::BigInt) -> serde_json::Number {
    x.to_string().parse().expect("integer literal")
}

impl Report {
    fn empty(input: &str, f: &FVector) -> Self {
        Report {
            input: input.to_string(),
            f_vector: f.0.iter().map(number).collect(),
            euler: euler_check(f, f.dim()),
            four_flag: None,
            fatness: None,
            complexity: None,
            delta0_vertex: None,
            delta0_facet: None,
            cone: None,
            inequalities: None,
            hierarchy: None,
            face_types: None,
            notes: Vec::new(),
        }
    }

    fn fill_flag(&mut self, q: &FourFlag) {
        self.four_flag = Some(q.to_string());
        let mut note = |what: &str, e: crate::Error| self.notes.push(format!("{what}: {e}"));
        let fat = fatness(q);
        let cpx = complexity(q);
        let dv = delta0(q, Delta0::VertexOnly);
        let df = delta0(q, Delta0::FacetAugmented);
        let ineq = inequality_report(q);
        let cone = cone_classify(&q.f_vector());
        let fat = fat.map_err(|e| note("fatness", e)).ok();
        let cpx = cpx.map_err(|e| note("complexity", e)).ok();
        let dv = dv.map_err(|e| note("delta0 (vertex-only)", e)).ok();
        let df = df.map_err(|e| note("delta0 (facet-augmented)", e)).ok();
        let ineq = ineq.map_err(|e| note("inequalities", e)).ok();
        let cone = cone.map_err(|e| note("cone", e)).ok();
        self.fatness = fat.as_ref().map(Value::from);
        self.complexity = cpx.as_ref().map(Value::from);
        self.delta0_vertex = dv.as_ref().map(Value::from);
        self.delta0_facet = df.as_ref().map(Value::from);
        self.inequalities = ineq;
        self.cone = cone.map(|c| ConeSummary {
            phi0: c.phi0.as_ref().map(Value::from),
            phi3: c.phi3.as_ref().map(Value::from),
            inside: c.inside,
            satisfied: c.satisfied.iter().map(|i| i.to_string()).collect(),
            tight: c.tight.iter().map(|i| i.to_string()).collect(),
            degenerate: c.degenerate,
        });
    }

    /// Report on a condensed flag-vector alone.
    pub fn for_flag(input: &str, q: &FourFlag) -> Self {
        let mut r = Self::empty(input, &q.f_vector());
        r.fill_flag(q);
        r
    }

    /// Report on a lattice: hierarchy checks always; flag quantities when
    /// the lattice has length 5; face types for lengths 4 and 5.
    pub fn for_lattice(input: &str, l: &FaceLattice, strict_intervals: bool) -> Result<Self> {
        let f = FVector::from(l.f_vector());
        let mut r = Self::empty(input, &f);
        r.hierarchy = Some(hierarchy_report(l, strict_intervals));
        if l.is_graded() && (l.length() == 4 || l.length() == 5) {
            r.face_types = Some(face_type_flags(l)?);
        }
        if l.is_graded() && l.length() == 5 {
            let q = four_flag(&flag_vector(l)?)?;
            r.fill_flag(&q);
        }
        Ok(r)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| crate::Error::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })
    }

    /// Human-readable table.
    pub fn to_table(&self) -> String {
        fn row(s: &mut String, k: &str, v: impl fmt::Display) {
            let _ = writeln!(s, "{k:<28} {v}");
        }
        fn val(s: &mut String, k: &str, v: &Option<Value>) {
            if let Some(v) = v {
                row(s, k, format_args!("{} ≈ {}", v.exact, v.decimal));
            }
        }
        let s = &mut String::new();
        row(s, "input", &self.input);
        let fv: Vec<String> = self.f_vector.iter().map(|n| n.to_string()).collect();
        row(s, "f-vector", format_args!("({})", fv.join(",")));
        row(s, "euler-poincare", if self.euler { "ok" } else { "VIOLATED" });
        if let Some(q) = &self.four_flag {
            row(s, "flag (f0,f1,f2,f3;f03)", q);
        }
        val(s, "fatness", &self.fatness);
        val(s, "complexity", &self.complexity);
        val(s, "delta0 (vertex-only)", &self.delta0_vertex);
        val(s, "delta0 (facet-augmented)", &self.delta0_facet);
        if let Some(c) = &self.cone {
            val(s, "phi0", &c.phi0);
            val(s, "phi3", &c.phi3);
            row(s, "cone", if c.inside { "inside" } else { "OUTSIDE" });
            row(s, "cone tight", format_args!("{{{}}}", c.tight.join(",")));
            if c.degenerate {
                row(s, "cone apex", "yes (simplex)");
            }
        }
        if let Some(i) = &self.inequalities {
            row(s, "complexity <= 2 fat - 2", i.complexity_le_2_fatness_minus_2);
            row(s, "fatness <= 2 cplx - 2", i.fatness_le_2_complexity_minus_2);
            row(s, "complexity >= 3", i.complexity_ge_3);
            row(s, "fatness >= 2 cplx - 5 (conj)", i.fatness_ge_2_complexity_minus_5);
            row(s, "fatness <= 5 (conj)", i.fatness_le_5);
        }
        if let Some(h) = &self.hierarchy {
            row(s, "classification", h.classification);
            row(
                s,
                "graded/lattice/eulerian/conn",
                format_args!("{}/{}/{}/{}", h.is_graded, h.is_lattice, h.is_eulerian, h.is_connected),
            );
        }
        if let Some(t) = &self.face_types {
            let opt = |o: Option<bool>| o.map_or("-".to_string(), |b| b.to_string());
            row(s, "simplicial / simple", format_args!("{} / {}", t.simplicial, t.simple));
            row(
                s,
                "2-simplicial / 2-simple",
                format_args!("{} / {}", opt(t.two_simplicial), opt(t.two_simple)),
            );
            row(s, "all facets simple", opt(t.all_facets_simple));
        }
        for n in &self.notes {
            row(s, "note", n);
        }
        std::mem::take(s)
    }
}
