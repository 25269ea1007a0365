use leadsolve::commitment::endpoints;
use leadsolve::equilibria::maximin;
use leadsolve::game::{compute_d, Player};
use leadsolve::trd::{build_trd, iesds, TrdSpec};
use std::time::Instant;

fn main() {
    let t0 = Instant::now();
    let game = build_trd(TrdSpec { max_claim: 100 }).unwrap();
    println!("build: {:?}", t0.elapsed());
    let t = Instant::now();
    let d = compute_d(&game);
    println!("compute_d ({} cols): {:?}", d.len(), t.elapsed());
    let t = Instant::now();
    let mm = maximin(&game, Player::I);
    println!("maximin = {}: {:?}", mm.value, t.elapsed());
    let t = Instant::now();
    let out = iesds(&game);
    println!("iesds ({} rounds): {:?}", out.rounds.len(), t.elapsed());
    let t = Instant::now();
    let tw = iesds(&game.twisted());
    println!("twisted iesds ({} rounds): {:?}", tw.rounds.len(), t.elapsed());
    let t = Instant::now();
    let (low, _, high, _) = endpoints(&game, Player::I);
    println!("endpoints {low} {high}: {:?}", t.elapsed());
    println!("total: {:?}", t0.elapsed());
}
