//! The four subcommands, each producing a [`Report`].

use milnor::curve::{
    alexander_iterated, cable_presentation, characteristic_pairs, intersection_multiplicity,
    linking_number, BivariatePolynomial, PuiseuxBranch,
};
use milnor::pham::{self, ClassEvidence, Enumeration, Exponents};
use milnor::plumbing::{self, PlumbingGraph};
use milnor::{Error, Result};

use crate::report::{Field, Report, Value};

/// Characteristic polynomials above this degree are summarized by their
/// cyclotomic factorization only.
pub const DEFAULT_MAX_DEGREE: usize = 2000;

fn field(key: &str, value: Value) -> Field {
    Field {
        key: key.into(),
        value,
        source: None,
    }
}

pub fn link(exponents: &[u64], cfg: &Enumeration, max_degree: usize) -> Result<Report> {
    let mut r = Report::new("link");
    r.echo("exponents", Value::ints(exponents));
    let a = Exponents::new(exponents.to_vec())?;
    let n = a.n();
    r.push("n", Value::int(n), "number of variables minus one");
    r.push(
        "milnor_number",
        Value::int(a.milnor_number()),
        "product of (a_i - 1)",
    );
    r.push("lcm", Value::int(a.lcm()?), "lcm of exponents");
    r.push(
        "connectivity",
        Value::int(pham::connectivity_statement(&a)),
        "link is (n-2)-connected",
    );

    let spectrum = cfg.spectrum(&a)?;
    r.push(
        "spectrum_distinct",
        Value::int(spectrum.entries().len()),
        "distinct eigenvalue rotations",
    );
    if spectrum.entries().len() <= max_degree {
        let rows = spectrum
            .entries()
            .iter()
            .map(|(rot, m)| {
                Value::Record(vec![
                    field("rotation", Value::rational(rot)),
                    field("multiplicity", Value::int(m)),
                ])
            })
            .collect();
        r.push(
            "spectrum",
            Value::List(rows),
            "sum of k_j/a_j mod 1 over 0 < k_j < a_j",
        );
    }
    let fact = spectrum.cyclotomic_factorization()?;
    r.push(
        "factorization",
        Value::text(&fact),
        "Moebius inversion of eigenvalue orders",
    );
    if fact.degree() as usize <= max_degree {
        let poly = fact.expand();
        if !poly.is_monic() {
            return Err(Error::Internal(
                "characteristic polynomial is not monic".into(),
            ));
        }
        r.push(
            "characteristic_polynomial",
            Value::poly(&poly),
            "product of cyclotomic factors",
        );
    } else {
        r.push(
            "characteristic_polynomial",
            Value::text(format!(
                "omitted: degree {} exceeds --max-degree",
                fact.degree()
            )),
            "size cap",
        );
    }
    r.push(
        "delta_at_1",
        Value::int(fact.eval_i64(1)),
        "factorization evaluated at t = 1",
    );
    r.push(
        "delta_at_minus_1",
        Value::int(fact.eval_i64(-1)),
        "factorization evaluated at t = -1",
    );

    if n >= 3 {
        r.push(
            "homotopy_sphere",
            Value::Bool(pham::is_homotopy_sphere(&a)?),
            "gcd-graph criterion",
        );
    }
    if n % 2 == 0 {
        let s = cfg.signature(&a)?;
        r.push(
            "signature",
            Value::int(s.value()),
            "sigma+ - sigma- by sum counts mod 2",
        );
        r.push("signature_plus", Value::int(s.plus), "sums in (0,1) mod 2");
        r.push(
            "signature_minus",
            Value::int(s.minus),
            "sums in (1,2) mod 2",
        );
        r.push("nullity", Value::int(s.nullity()), "integral sums");
    }
    if n >= 3 {
        let class = cfg.sphere_class(&a)?;
        let source = match &class.evidence {
            ClassEvidence::GraphCriterion => "gcd-graph criterion".to_string(),
            ClassEvidence::Signature(s) => format!("signature {s} / 8"),
            ClassEvidence::AlexanderAtMinusOne { value, residue } => {
                format!("delta(-1) = {value} = {residue} mod 8")
            }
        };
        r.push("sphere_class", Value::text(&class), &source);
    }
    if a.len() == 3 {
        let homology = pham::is_homology_3_sphere(&a)?;
        r.push(
            "homology_sphere",
            Value::Bool(homology),
            "exponents pairwise coprime",
        );
        let g = pham::geometry_type(&a)?;
        r.push(
            "geometry",
            Value::text(g.kind),
            "1/a + 1/b + 1/c compared with 1",
        );
        r.push(
            "reciprocal_sum",
            Value::rational(&g.reciprocal_sum),
            "1/a + 1/b + 1/c",
        );
        if homology {
            r.push(
                "casson",
                Value::int(cfg.casson_invariant(&a)?),
                "signature / 8",
            );
        }
    }
    Ok(r)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// `(6k−1, 3, 2, 2, 2)`: the ladder of homotopy 7-spheres.
    Bp8,
    /// `(d, 2, …, 2)` with `n` twos and odd `d`.
    Kervaire,
    /// `(2, 3, 6k∓1)`: Brieskorn homology spheres.
    Casson,
}

impl std::str::FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "bp8" => Ok(Family::Bp8),
            "kervaire" => Ok(Family::Kervaire),
            "casson" => Ok(Family::Casson),
            _ => Err(Error::InvalidInput(format!(
                "unknown family `{s}` (expected bp8, kervaire or casson)"
            ))),
        }
    }
}

impl Family {
    pub fn default_range(self) -> (u64, u64) {
        match self {
            Family::Bp8 => (1, 28),
            Family::Kervaire => (3, 17),
            Family::Casson => (1, 5),
        }
    }
}

/// Largest family parameter accepted by `table`.
pub const MAX_TABLE_PARAMETER: u64 = 1_000_000;

pub fn table(family: Family, from: u64, to: u64, n: usize, cfg: &Enumeration) -> Result<Report> {
    let mut r = Report::new("table");
    r.echo("from", Value::int(from)).echo("to", Value::int(to));
    if from > to {
        return Err(Error::InvalidInput(format!("empty range {from}..{to}")));
    }
    if to > MAX_TABLE_PARAMETER {
        return Err(Error::InvalidInput(format!(
            "range end {to} exceeds {MAX_TABLE_PARAMETER}"
        )));
    }
    let mut rows = Vec::new();
    match family {
        Family::Bp8 => {
            r.echo("family", Value::text("bp8"));
            if from == 0 {
                return Err(Error::InvalidInput("bp8 needs k >= 1".into()));
            }
            for k in from..=to {
                let a = Exponents::new(vec![6 * k - 1, 3, 2, 2, 2])?;
                let sigma = cfg.signature(&a)?.value();
                let class = cfg.sphere_class(&a)?;
                let mod_28 = match class.kind {
                    pham::SphereKind::BpClass {
                        mod_28: Some(c), ..
                    } => c,
                    _ => return Err(Error::Internal(format!("{a} is not a bP8 sphere"))),
                };
                rows.push(Value::Record(vec![
                    field("k", Value::int(k)),
                    field("exponents", Value::text(&a)),
                    field("signature", Value::int(sigma)),
                    field("class_mod_28", Value::int(mod_28)),
                ]));
            }
            r.push("rows", Value::List(rows), "signature / 8 mod 28");
        }
        Family::Kervaire => {
            r.echo("family", Value::text("kervaire"))
                .echo("n", Value::int(n));
            if n < 3 || n % 2 == 0 {
                return Err(Error::InvalidInput(format!(
                    "kervaire family needs odd n >= 3, got {n}"
                )));
            }
            for d in (from..=to).filter(|d| d % 2 == 1) {
                let mut e = vec![d];
                e.extend(std::iter::repeat(2).take(n));
                let a = Exponents::new(e)?;
                let class = cfg.sphere_class(&a)?;
                let residue = match &class.evidence {
                    ClassEvidence::AlexanderAtMinusOne { residue, .. } => Value::int(residue),
                    _ => Value::text("-"),
                };
                rows.push(Value::Record(vec![
                    field("d", Value::int(d)),
                    field("d_mod_8", Value::int(d % 8)),
                    field("delta_mod_8", residue),
                    field("class", Value::text(&class)),
                ]));
            }
            r.push("rows", Value::List(rows), "delta(-1) mod 8");
        }
        Family::Casson => {
            r.echo("family", Value::text("casson"));
            if from == 0 {
                return Err(Error::InvalidInput("casson family needs k >= 1".into()));
            }
            for k in from..=to {
                for c in [6 * k - 1, 6 * k + 1] {
                    let a = Exponents::new(vec![2, 3, c])?;
                    let sigma = cfg.signature(&a)?.value();
                    rows.push(Value::Record(vec![
                        field("exponents", Value::text(&a)),
                        field("signature", Value::int(sigma)),
                        field("casson", Value::int(cfg.casson_invariant(&a)?)),
                        field("geometry", Value::text(pham::geometry_type(&a)?.kind)),
                    ]));
                }
            }
            r.push("rows", Value::List(rows), "signature / 8");
        }
    }
    Ok(r)
}

/// Second object for `curve`: an implicit curve or another branch.
#[derive(Debug, Clone)]
pub enum Meet {
    Implicit(BivariatePolynomial),
    Branch(PuiseuxBranch),
}

pub fn curve(branch: &PuiseuxBranch, meet: Option<&Meet>) -> Result<Report> {
    let mut r = Report::new("curve");
    r.echo("branch", Value::text(branch));
    r.echo("multiplicity", Value::int(branch.multiplicity()));
    let pairs = characteristic_pairs(branch)?;
    r.push(
        "pairs",
        Value::text(&pairs),
        "gcd drops of exponent numerators",
    );
    let cable = cable_presentation(&pairs);
    r.push(
        "cable",
        Value::text(&cable),
        "s_k = n_k + p_k p_(k-1) s_(k-1)",
    );
    let delta = alexander_iterated(&cable)?;
    r.push(
        "alexander",
        Value::poly(&delta),
        "product of torus-knot polynomials",
    );
    let mu = pairs.milnor_number();
    r.push(
        "milnor_number",
        Value::int(mu),
        "conductor of the semigroup",
    );
    if delta.degree().unwrap_or(0) as u64 != mu {
        return Err(Error::Internal(format!(
            "Alexander polynomial has degree {:?} but the Milnor number is {mu}",
            delta.degree()
        )));
    }
    match meet {
        None => {}
        Some(Meet::Implicit(f)) => {
            r.echo("meet", Value::text(f));
            let k = intersection_multiplicity(branch, f)?;
            r.push(
                "intersection_multiplicity",
                Value::int(k),
                "ord_t f(t^m, y(t))",
            );
        }
        Some(Meet::Branch(b)) => {
            r.echo("meet", Value::text(b));
            let k = linking_number(branch, b)?;
            r.push(
                "intersection_multiplicity",
                Value::int(k),
                "m1 * sum of contact orders over conjugates",
            );
        }
    }
    Ok(r)
}

pub fn plumb(name: &str, g: &PlumbingGraph) -> Result<Report> {
    let mut r = Report::new("plumb");
    r.echo("graph", Value::text(name));
    let h = plumbing::boundary_homology(g)?;
    let m = plumbing::intersection_matrix(g);
    r.push("vertices", Value::int(g.vertex_count()), "graph");
    r.push("edges", Value::int(g.edge_count()), "graph");
    let rows = (0..m.rows()).map(|i| Value::ints(m.row(i))).collect();
    r.push(
        "matrix",
        Value::List(rows),
        "euler numbers on the diagonal, edge weights off it",
    );
    r.push(
        "determinant",
        Value::int(&h.determinant),
        "Bareiss elimination",
    );
    r.push(
        "invariant_factors",
        Value::List(
            h.smith
                .invariant_factors
                .iter()
                .map(Value::int)
                .collect::<Vec<_>>(),
        ),
        "Smith normal form",
    );
    r.push(
        "h1",
        Value::text(h.describe()),
        "cokernel of the intersection matrix",
    );
    r.push(
        "homology_sphere",
        Value::Bool(h.is_homology_sphere()),
        "|det| = 1",
    );
    r.push(
        "negative_definite",
        Value::Bool(plumbing::is_negative_definite(&m)),
        "leading principal minors alternate in sign",
    );
    r.push(
        "signature",
        Value::int(m.signature()),
        "inertia of the intersection form",
    );
    r.push(
        "boundary_euler_characteristic",
        Value::int(plumbing::euler_characteristic_boundary(g)?),
        "b0 - b1 + b2 - b3 with Poincare duality",
    );
    Ok(r)
}
