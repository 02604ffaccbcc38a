//! Serializable summaries shared by the CLI and the tests. All output is
//! ordered by element or object index, so identical inputs give identical
//! bytes.

use std::fmt::{self, Write as _};

use serde::Serialize;

use crate::category::{Morphism, NormalCategory};
use crate::error::Result;
use crate::green::GreenStructure;
use crate::semigroup::FiniteSemigroup;
use crate::tl::TlSemigroup;
use crate::verify::{Budgets, Pipeline};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub order: usize,
    pub idempotents: Vec<usize>,
    pub l_classes: usize,
    pub r_classes: usize,
    pub h_classes: usize,
    pub d_classes: usize,
    pub commutative: bool,
    pub regular: bool,
    pub inverse: bool,
    pub clifford: bool,
    pub semilattice: bool,
    pub group: bool,
    /// `(e, x)` with `e` idempotent and `ex != xe`.
    pub centrality_witness: Option<(usize, usize)>,
    pub unique_idempotent_per_d_class: bool,
}

impl Summary {
    pub fn new(s: &FiniteSemigroup) -> Self {
        let g = GreenStructure::new(s);
        Summary {
            order: s.order(),
            idempotents: s.idempotents(),
            l_classes: GreenStructure::class_count(&g.lclass),
            r_classes: GreenStructure::class_count(&g.rclass),
            h_classes: GreenStructure::class_count(&g.hclass),
            d_classes: GreenStructure::class_count(&g.dclass),
            commutative: s.is_commutative(),
            regular: s.is_regular(),
            inverse: s.is_inverse(),
            clifford: s.is_clifford(),
            semilattice: s.is_semilattice(),
            group: s.is_group(),
            centrality_witness: s.centrality_witness(),
            unique_idempotent_per_d_class: g.unique_idempotent_per_d_class(s),
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let ids: Vec<String> = self.idempotents.iter().map(usize::to_string).collect();
        let _ = writeln!(out, "order: {}", self.order);
        let _ = writeln!(out, "idempotents: {}", ids.join(" "));
        let _ = writeln!(
            out,
            "green classes: L={} R={} H={} D={}",
            self.l_classes, self.r_classes, self.h_classes, self.d_classes
        );
        for (name, flag) in [
            ("commutative", self.commutative),
            ("regular", self.regular),
            ("inverse", self.inverse),
            ("clifford", self.clifford),
            ("semilattice", self.semilattice),
            ("group", self.group),
        ] {
            let _ = writeln!(out, "{name}: {flag}");
        }
        if let Some((e, x)) = self.centrality_witness {
            let _ = writeln!(out, "centrality witness: e={e} x={x}");
        }
        out
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ConeEntry {
    pub apex: usize,
    pub components: Vec<(usize, usize, usize)>,
    pub principal: bool,
    /// Least `a` with `ρ^a` equal to this cone.
    pub witness: Option<usize>,
}

pub fn cone_dump(c: &NormalCategory, tl: &TlSemigroup) -> Vec<ConeEntry> {
    tl.cones
        .iter()
        .enumerate()
        .map(|(i, cone)| ConeEntry {
            apex: cone.apex,
            components: cone.morphisms(c).iter().map(Morphism::triple).collect(),
            principal: tl.is_principal(i),
            witness: tl.principal_witness(i),
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Status {
    #[serde(rename = "PASS")]
    Pass,
    #[serde(rename = "FAIL")]
    Fail,
    #[serde(rename = "N-A")]
    NotApplicable,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::NotApplicable => "N-A",
        })
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Row {
    pub check: &'static str,
    pub status: Status,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub summary: Summary,
    pub budgets: Budgets,
    pub rows: Vec<Row>,
    /// Full per-check reports, keyed by check name.
    pub details: serde_json::Map<String, serde_json::Value>,
    pub visited: Option<Visited>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Visited {
    pub tl: Vec<u64>,
    pub tr: Vec<u64>,
}

impl VerifyReport {
    pub fn failed(&self) -> bool {
        self.rows.iter().any(|r| r.status == Status::Fail)
    }

    pub fn to_text(&self) -> String {
        let width = self.rows.iter().map(|r| r.check.len()).max().unwrap_or(0);
        let mut out = String::new();
        for row in &self.rows {
            let _ = writeln!(
                out,
                "{:<width$}  {:<4}  {}",
                row.check, row.status, row.detail
            );
        }
        out
    }
}

fn status(applies: bool, pass: bool) -> Status {
    match (applies, pass) {
        (false, _) => Status::NotApplicable,
        (true, true) => Status::Pass,
        (true, false) => Status::Fail,
    }
}

fn value<T: Serialize>(x: &T) -> serde_json::Value {
    serde_json::to_value(x).expect("reports serialize")
}

/// Runs every check in order. Checks whose premise (regular, Clifford,
/// semilattice) fails on this input are reported `N-A` with what was found.
pub fn verify_report(s: &FiniteSemigroup, budgets: Budgets) -> Result<VerifyReport> {
    let summary = Summary::new(s);
    let mut rows = Vec::new();
    let mut details = serde_json::Map::new();
    let names = [
        "prop2",
        "prop3",
        "prop4",
        "prop5",
        "theorem6",
        "theorem7",
        "theorem8",
        "degeneration",
        "semilattice",
        "homomorphism",
        "tl-regular",
    ];
    if !summary.regular {
        for check in names {
            rows.push(Row {
                check,
                status: Status::NotApplicable,
                detail: "premise fails: not regular".into(),
            });
        }
        return Ok(VerifyReport {
            summary,
            budgets,
            rows,
            details,
            visited: None,
        });
    }

    let p = Pipeline::new(s, budgets)?;
    let clifford = summary.clifford;
    let premise = if clifford {
        ""
    } else {
        "premise fails (not Clifford); "
    };

    let prop2 = p.prop2();
    let detail = match prop2.witness {
        Some((e, f, m)) => format!("{premise}S{e} and S{f} are isomorphic via {m}"),
        None => format!(
            "{premise}{} object pairs, isomorphic iff identical",
            prop2.pairs_checked
        ),
    };
    rows.push(Row {
        check: "prop2",
        status: status(clifford, prop2.pass),
        detail,
    });
    details.insert("prop2".into(), value(&prop2));

    let prop3 = p.prop3();
    let detail = match prop3.witness {
        Some((a, b)) => format!("{premise}{a:?} and {b:?} name the same morphism"),
        None => format!("{premise}{} raw triples, all distinct", prop3.raw_triples),
    };
    rows.push(Row {
        check: "prop3",
        status: status(clifford, prop3.pass),
        detail,
    });
    details.insert("prop3".into(), value(&prop3));

    let prop4 = p.prop4();
    let detail = format!(
        "{premise}|TL| = {}, non-principal cones: {}",
        prop4.cones,
        prop4.non_principal.len()
    );
    rows.push(Row {
        check: "prop4",
        status: status(clifford, prop4.pass),
        detail,
    });
    details.insert("prop4".into(), value(&prop4));

    let prop5 = p.prop5();
    let detail = match prop5.witness {
        Some((a, b)) => format!("{premise}rho^{a} = rho^{b}"),
        None => format!("{premise}a -> rho^a is injective"),
    };
    rows.push(Row {
        check: "prop5",
        status: status(clifford, prop5.pass),
        detail,
    });
    details.insert("prop5".into(), value(&prop5));

    let t6 = p.theorem6();
    let detail = format!(
        "{premise}|S| = {}, |TL| = {}, hom={} inj={} surj={}",
        t6.order, t6.cones, t6.homomorphism, t6.injective, t6.surjective
    );
    rows.push(Row {
        check: "theorem6",
        status: status(clifford, t6.isomorphism),
        detail,
    });
    details.insert("theorem6".into(), value(&t6));

    let t7 = p.theorem7()?;
    let detail = format!(
        "{premise}N*L(S) has {} objects/{} morphisms, R(S) has {}/{}",
        t7.source_objects, t7.source_morphisms, t7.target_objects, t7.target_morphisms
    );
    rows.push(Row {
        check: "theorem7",
        status: status(clifford, t7.verified),
        detail,
    });
    details.insert("theorem7".into(), value(&t7));

    let t8 = p.theorem8()?;
    let detail = format!(
        "{premise}|TR| = {}, anti-isomorphic: {}, N*R(S) ~ L(S): {}",
        t8.tr_order,
        t8.anti_isomorphism.is_some(),
        t8.dual.verified
    );
    rows.push(Row {
        check: "theorem8",
        status: status(clifford, t8.pass),
        detail,
    });
    details.insert("theorem8".into(), value(&t8));

    let gamma = t7.verified;
    let delta = t8.dual.verified;
    let detail = format!("{premise}gamma={gamma} delta={delta}");
    rows.push(Row {
        check: "degeneration",
        status: status(clifford, gamma && delta),
        detail,
    });

    if summary.semilattice {
        let sl = p.semilattice()?;
        let detail = format!(
            "TL commutative={} idempotent={} |TL|=|S|: {}",
            sl.tl_commutative, sl.tl_idempotent, sl.orders_match
        );
        rows.push(Row {
            check: "semilattice",
            status: status(true, sl.pass),
            detail,
        });
        details.insert("semilattice".into(), value(&sl));
    } else {
        rows.push(Row {
            check: "semilattice",
            status: Status::NotApplicable,
            detail: "premise fails: not a semilattice".into(),
        });
    }

    let hom = t6.homomorphism_witness;
    let detail = match hom {
        Some((a, b)) => format!("rho^{a} rho^{b} != rho^({a}{b})"),
        None => format!("{} products checked", s.order() * s.order()),
    };
    rows.push(Row {
        check: "homomorphism",
        status: status(true, hom.is_none()),
        detail,
    });

    let wf = p.tl_well_formed();
    let detail = match wf.irregular_cone {
        Some(i) => format!("cone {i} has no inner inverse"),
        None => format!("{} cones, associative and regular", wf.order),
    };
    rows.push(Row {
        check: "tl-regular",
        status: status(true, wf.pass),
        detail,
    });
    details.insert("tl".into(), value(&wf));

    Ok(VerifyReport {
        summary,
        budgets,
        rows,
        details,
        visited: Some(Visited {
            tl: p.tl.visited.clone(),
            tr: p.tr.visited.clone(),
        }),
    })
}
