use serde::Serialize;

use crate::cli::problem::{PolyDecl, ProblemFile, Resolved, WpoFile};
use crate::cli::render::{poly_to_decl, render_monomial_pub, render_poly};
use crate::engine::{self, Basis, GBResult, GBStatus};
use crate::error::Result;
use crate::finite;
use crate::wpo;

/// Exit codes shared by the binary and the C API: 0 success/true,
/// 1 invalid input (reported as `Err`), 2 budget exhausted, 3 false.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommandOutput {
    pub exit_code: i32,
    pub document: String,
}

#[derive(Serialize)]
struct PolyOut {
    text: String,
    terms: PolyDecl,
}

#[derive(Serialize)]
struct StatsOut {
    pairs_processed: u64,
    reductions: u64,
    max_width: u32,
}

#[derive(Serialize)]
struct GbDocument {
    status: String,
    basis: Vec<PolyOut>,
    stats: StatsOut,
}

fn status_str(s: GBStatus) -> String {
    match s {
        GBStatus::Complete => "complete".into(),
        GBStatus::BudgetExhausted => "budget-exhausted".into(),
    }
}

fn poly_out(resolved: &Resolved, f: &crate::algebra::Polynomial) -> PolyOut {
    PolyOut {
        text: render_poly(&resolved.ring, &resolved.order, f),
        terms: poly_to_decl(&resolved.ring, &resolved.order, f),
    }
}

fn gb_document(resolved: &Resolved, result: &GBResult) -> GbDocument {
    GbDocument {
        status: status_str(result.status),
        basis: result.basis.elements().iter().map(|f| poly_out(resolved, f)).collect(),
        stats: StatsOut {
            pairs_processed: result.stats.pairs_processed,
            reductions: result.stats.reductions,
            max_width: result.stats.max_width,
        },
    }
}

fn to_json<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("serializable");
    s.push('\n');
    s
}

/// Computes the equivariant Groebner basis of the problem's generators.
pub fn cmd_gb(pf: &ProblemFile, pretty: bool) -> Result<CommandOutput> {
    let resolved = pf.resolve()?;
    let result = engine::equivariant_buchberger(
        &resolved.generators,
        &resolved.ring,
        &resolved.order,
        &resolved.config,
    )?;
    let exit_code = if result.status == GBStatus::Complete { 0 } else { 2 };
    let document = if pretty {
        let mut out = format!("status: {}\nbasis ({} elements):\n", status_str(result.status), result.basis.len());
        for f in result.basis.elements() {
            out.push_str("  ");
            out.push_str(&render_poly(&resolved.ring, &resolved.order, f));
            out.push('\n');
        }
        out.push_str(&format!(
            "stats: pairs={} reductions={} max-width={}\n",
            result.stats.pairs_processed, result.stats.reductions, result.stats.max_width
        ));
        out
    } else {
        to_json(&gb_document(&resolved, &result))
    };
    Ok(CommandOutput { exit_code, document })
}

#[derive(Serialize)]
struct StepOut {
    basis_index: usize,
    witness: Vec<(u32, u32)>,
    multiplier: String,
    coeff: String,
}

#[derive(Serialize)]
struct ReduceDocument {
    basis_status: String,
    remainder: PolyOut,
    remainder_is_zero: bool,
    certificate: Vec<StepOut>,
}

#[derive(Serialize)]
struct BudgetDocument {
    status: String,
}

/// Builds the reduction basis: the generators as-is under `--assume-basis`,
/// otherwise the completed equivariant basis.
fn reduction_basis(resolved: &Resolved, assume_basis: bool) -> Result<std::result::Result<Basis, CommandOutput>> {
    if assume_basis {
        return Ok(Ok(Basis::new(
            resolved.ring.clone(),
            resolved.order.clone(),
            resolved.generators.clone(),
        )?));
    }
    let result = engine::equivariant_buchberger(
        &resolved.generators,
        &resolved.ring,
        &resolved.order,
        &resolved.config,
    )?;
    if result.status != GBStatus::Complete {
        let doc = to_json(&BudgetDocument { status: status_str(result.status) });
        return Ok(Err(CommandOutput { exit_code: 2, document: doc }));
    }
    Ok(Ok(result.basis))
}

/// Reduces the target modulo the (computed or assumed) basis and prints the
/// remainder plus the division certificate.
pub fn cmd_reduce(
    pf: &ProblemFile,
    target: &PolyDecl,
    assume_basis: bool,
    pretty: bool,
) -> Result<CommandOutput> {
    let resolved = pf.resolve()?;
    let basis = match reduction_basis(&resolved, assume_basis)? {
        Ok(b) => b,
        Err(out) => return Ok(out),
    };
    let f = crate::cli::problem::resolve_poly(&resolved.ring, target)?;
    let (rem, steps) = engine::reduce(&f, &basis)?;
    let document = if pretty {
        format!(
            "remainder: {}\nsteps: {}\n",
            render_poly(&resolved.ring, &resolved.order, &rem),
            steps.len()
        )
    } else {
        to_json(&ReduceDocument {
            basis_status: "complete".into(),
            remainder: poly_out(&resolved, &rem),
            remainder_is_zero: rem.is_zero(),
            certificate: steps
                .iter()
                .map(|s| StepOut {
                    basis_index: s.basis_index,
                    witness: s.witness.pairs().to_vec(),
                    multiplier: render_monomial_pub(&resolved.ring, &resolved.order, &s.multiplier),
                    coeff: s.coeff.to_input_string(),
                })
                .collect(),
        })
    };
    Ok(CommandOutput { exit_code: 0, document })
}

#[derive(Serialize)]
struct MemberDocument {
    member: bool,
    remainder: PolyOut,
}

/// Ideal membership: true iff the target reduces to zero.
pub fn cmd_member(
    pf: &ProblemFile,
    target: &PolyDecl,
    assume_basis: bool,
    pretty: bool,
) -> Result<CommandOutput> {
    let resolved = pf.resolve()?;
    let basis = match reduction_basis(&resolved, assume_basis)? {
        Ok(b) => b,
        Err(out) => return Ok(out),
    };
    let f = crate::cli::problem::resolve_poly(&resolved.ring, target)?;
    let (rem, _) = engine::reduce(&f, &basis)?;
    let member = rem.is_zero();
    let document = if pretty {
        format!("member: {member}\n")
    } else {
        to_json(&MemberDocument { member, remainder: poly_out(&resolved, &rem) })
    };
    Ok(CommandOutput { exit_code: if member { 0 } else { 3 }, document })
}

#[derive(Serialize)]
struct ExpandDocument {
    width: u32,
    count: usize,
    polynomials: Vec<PolyOut>,
}

/// Expands the generators to every image inside the given width.
pub fn cmd_expand(pf: &ProblemFile, width: u32, pretty: bool) -> Result<CommandOutput> {
    let resolved = pf.resolve()?;
    let mut expanded = finite::orbit_expand_polys(&resolved.generators, width)?;
    expanded.sort_by(|a, b| {
        a.width()
            .cmp(&b.width())
            .then_with(|| {
                let la = resolved.order.leading_monomial(a).expect("nonzero");
                let lb = resolved.order.leading_monomial(b).expect("nonzero");
                resolved.order.compare(la, lb)
            })
            .then_with(|| a.cmp(b))
    });
    let document = if pretty {
        let mut out = format!("width: {width}\npolynomials ({}):\n", expanded.len());
        for f in &expanded {
            out.push_str("  ");
            out.push_str(&render_poly(&resolved.ring, &resolved.order, f));
            out.push('\n');
        }
        out
    } else {
        to_json(&ExpandDocument {
            width,
            count: expanded.len(),
            polynomials: expanded.iter().map(|f| poly_out(&resolved, f)).collect(),
        })
    };
    Ok(CommandOutput { exit_code: 0, document })
}

#[derive(Serialize)]
struct VerifyDocument {
    width: u32,
    gb_status: String,
    consistent: bool,
    stats: StatsOut,
}

/// Computes the equivariant basis, expands both it and the generators to
/// the given width, and checks ideal equality with the classical oracle.
pub fn cmd_verify(pf: &ProblemFile, width: u32, pretty: bool) -> Result<CommandOutput> {
    let resolved = pf.resolve()?;
    let result = engine::equivariant_buchberger(
        &resolved.generators,
        &resolved.ring,
        &resolved.order,
        &resolved.config,
    )?;
    if result.status != GBStatus::Complete {
        let doc = to_json(&BudgetDocument { status: status_str(result.status) });
        return Ok(CommandOutput { exit_code: 2, document: doc });
    }
    let consistent = finite::truncation_consistent(&resolved.generators, &result.basis, width)?;
    let document = if pretty {
        format!("width: {width}\nconsistent: {consistent}\n")
    } else {
        to_json(&VerifyDocument {
            width,
            gb_status: status_str(result.status),
            consistent,
            stats: StatsOut {
                pairs_processed: result.stats.pairs_processed,
                reductions: result.stats.reductions,
                max_width: result.stats.max_width,
            },
        })
    };
    Ok(CommandOutput { exit_code: if consistent { 0 } else { 3 }, document })
}

#[derive(Serialize)]
struct WpoDocument {
    relation: String,
    result: bool,
}

/// Runs one well-partial-order oracle on a subject file.
pub fn cmd_wpo(subject: &WpoFile, pretty: bool) -> Result<CommandOutput> {
    let (relation, result) = match subject {
        WpoFile::Dickson { a, b } => ("dickson", wpo::dickson_leq(a, b)?),
        WpoFile::Multiset { poset, a, b } => {
            ("multiset", wpo::multiset_leq(a, b, &poset.to_core()?)?)
        }
        WpoFile::Higman { poset, a, b } => ("higman", wpo::higman_leq(a, b, &poset.to_core()?)?),
        WpoFile::Kruskal { poset, a, b } => ("kruskal", wpo::kruskal_leq(a, b, &poset.to_core()?)?),
    };
    let document = if pretty {
        format!("{result}\n")
    } else {
        to_json(&WpoDocument { relation: relation.into(), result })
    };
    Ok(CommandOutput { exit_code: if result { 0 } else { 3 }, document })
}
