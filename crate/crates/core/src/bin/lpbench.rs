use leadsolve::trd::{solve_trd, TrdSpec};
use std::time::Instant;

fn main() {
    let start = Instant::now();
    let report = solve_trd(TrdSpec { max_claim: 100 }).unwrap();
    println!("alpha_low  = {}", report.leader.alpha_low);
    println!("alpha_high = {}", report.leader.alpha_high);
    println!("v          = {}", report.leader.v_leader);
    for w in &report.leader.witnesses_low {
        println!(
            "witness: support indices {:?}, induces col {}, beta_f {}, tie {}",
            w.x.support(),
            w.induced,
            w.beta_f,
            w.tie
        );
    }
    println!("nash payoffs: {:?}", report.nash.payoff_pairs());
    println!("twisted payoffs: {:?}", report.twisted.payoff_pairs());
    println!("saddles: {}", report.saddles.len());
    println!("asc: {}", report.asc.asc);
    for (name, check) in &report.cce_checks {
        println!("cce {name}: pass {} expected {:?}", check.is_cce, check.expected);
    }
    println!("rounds: {}", report.iesds.rounds.len());
    println!("elapsed: {:?}", start.elapsed());
}
