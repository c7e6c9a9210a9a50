//! Deterministic plain-text renderings of computed structure: summary
//! lines, the two-chain network, congruence lattices, and suite verdicts.

use crate::congruence::{self, Congruence};
use crate::formats::emit_cng1;
use crate::lattice::CongruenceLattice;
use crate::network::MinNetwork;
use crate::semigroup::InverseSemigroup;
use crate::verify::{self, SuiteReport, Verdict};

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// One-line structural summary of a validated semigroup.
pub fn render_summary(s: &InverseSemigroup) -> String {
    format!(
        "order={} idempotents={} zero={} clifford={} e_unitary={} e_reflexive={} fundamental={} e_disjunctive={}\n",
        s.order(),
        s.idempotents().len(),
        yes_no(s.zero().is_some()),
        yes_no(verify::is_clifford(s)),
        yes_no(verify::is_e_unitary(s)),
        yes_no(verify::is_e_reflexive(s)),
        yes_no(verify::is_fundamental(s)),
        yes_no(verify::is_e_disjunctive(s)),
    )
}

/// The two chains level by level, the stabilization point, and the named
/// landmark congruences.
pub fn render_network(s: &InverseSemigroup, net: &MinNetwork) -> String {
    let mut out = String::new();
    for k in 0..=net.stabilization_level() {
        out.push_str(&format!(
            "level {k}: alpha=[{}] beta=[{}] meet=[{}]\n",
            emit_cng1(net.alpha(k)),
            emit_cng1(net.beta(k)),
            emit_cng1(&net.meet_at(s, k)),
        ));
    }
    out.push_str(&format!("stabilization level {}\n", net.stabilization_level()));
    let mu = congruence::greatest_idempotent_separating(s);
    let tau = congruence::greatest_idempotent_pure(s);
    for (name, c) in [
        ("sigma", net.sigma()),
        ("eta", net.eta()),
        ("nu", net.nu()),
        ("pi", net.pi()),
        ("lambda", net.lambda()),
        ("mu", &mu),
        ("tau", &tau),
    ] {
        out.push_str(&format!("{name}=[{}] classes={}\n", emit_cng1(c), c.class_count()));
    }
    out
}

/// Every congruence of the lattice in canonical order, then the covering
/// edges of its Hasse diagram.
pub fn render_lattice(lattice: &CongruenceLattice) -> String {
    let mut out = format!("congruences {}\n", lattice.len());
    for (i, c) in lattice.iter().enumerate() {
        out.push_str(&format!("c{i} classes={} [{}]\n", c.class_count(), emit_cng1(c)));
    }
    for (a, b) in lattice.hasse_edges() {
        out.push_str(&format!("edge c{a} < c{b}\n"));
    }
    out
}

/// One suite verdict line: name, parameters, agree/disagree, and the
/// condition bits in order.
pub fn render_suite(subject: &str, report: &SuiteReport) -> String {
    let mut out = format!("{subject} {}", report.suite);
    if let Some(m) = report.m {
        out.push_str(&format!(" m={m}"));
    }
    if let Some(n) = report.n {
        out.push_str(&format!(" n={n}"));
    }
    match &report.verdict {
        Verdict::AllAgree => out.push_str(" agree"),
        Verdict::Disagreement(idx) => {
            let list: Vec<String> = idx.iter().map(|i| i.to_string()).collect();
            out.push_str(&format!(" disagree[{}]", list.join(",")));
        }
    }
    out.push(' ');
    out.push_str(&report.bits());
    out.push('\n');
    out
}

/// A labeled congruence line used when reporting per-congruence suites.
pub fn congruence_tag(lattice: &CongruenceLattice, c: &Congruence) -> String {
    match lattice.position(c) {
        Some(i) => format!("c{i}"),
        None => format!("[{}]", emit_cng1(c)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::lattice::{enumerate_congruence_lattice, DEFAULT_LATTICE_CAP};
    use crate::network::{MinNetwork, DEFAULT_MAX_LEVEL};

    #[test]
    fn summary_matches_the_frozen_expectations() {
        let s = catalog::by_name("B2").unwrap().semigroup;
        assert_eq!(
            render_summary(&s),
            "order=5 idempotents=3 zero=yes clifford=no e_unitary=no e_reflexive=no fundamental=yes e_disjunctive=yes\n"
        );
    }

    #[test]
    fn network_rendering_is_deterministic_and_complete() {
        let s = catalog::build_symmetric_inverse_monoid(2).unwrap();
        let net = MinNetwork::compute(&s, DEFAULT_MAX_LEVEL).unwrap();
        let a = render_network(&s, &net);
        let b = render_network(&s, &net);
        assert_eq!(a, b);
        assert!(a.contains("stabilization level 3"));
        assert!(a.contains("level 0:"));
        assert!(a.contains("level 3:"));
        assert!(a.contains("sigma=["));
        assert!(a.contains("lambda=["));
    }

    #[test]
    fn lattice_rendering_lists_every_member_and_edge() {
        let s = catalog::by_name("B2").unwrap().semigroup;
        let lattice = enumerate_congruence_lattice(&s, DEFAULT_LATTICE_CAP).unwrap();
        let text = render_lattice(&lattice);
        assert!(text.starts_with("congruences 2\n"));
        assert!(text.contains("c0 classes=1 [0 0 0 0 0]"));
        assert!(text.contains("c1 classes=5 [0 1 2 3 4]"));
        assert!(text.contains("edge c1 < c0"));
    }

    #[test]
    fn suite_rendering_shows_parameters_and_bits() {
        let s = catalog::by_name("B2").unwrap().semigroup;
        let net = MinNetwork::compute(&s, DEFAULT_MAX_LEVEL).unwrap();
        let lattice = enumerate_congruence_lattice(&s, DEFAULT_LATTICE_CAP).unwrap();
        let report = crate::verify::suite_boeu(&s, &net, &lattice, 1);
        let line = render_suite("B2", &report);
        assert_eq!(line, "B2 boeu n=1 agree 00000000000\n");
    }
}
