//! Run every suite over every nonempty proper parabolic of the given systems.
//!
//! `cargo run --release --example sweep -- A3 B3`
use qhgr::verify::{run_suite, Setup, Suite};
use qhgr::RootSystem;

fn subsets(n: usize) -> Vec<Vec<usize>> {
    (1..(1u32 << n) - 1).map(|m| (0..n).filter(|i| m >> i & 1 == 1).collect()).collect()
}

fn main() {
    let ids: Vec<String> = std::env::args().skip(1).collect();
    for id in ids {
        let rs = RootSystem::parse(&id).unwrap();
        for dp in subsets(rs.rank()) {
            for s in Suite::ALL {
                let setup = Setup::new(&id, &dp);
                match run_suite(&setup, s) {
                    Ok(r) => {
                        let flag = if r.failures.is_empty() { "ok" } else { "FAIL" };
                        println!("{id} {:?} {:?} {} {} {}/{} vac {} {}ms", r.parabolic, r.order, s, flag, r.passes, r.total, r.vacuous, r.elapsed_ms);
                        for f in r.failures.iter().take(3) {
                            println!("    {:?} | {} | {}", f.case, f.lhs, f.rhs);
                        }
                    }
                    Err(e) => println!("{id} {:?} {} ERROR {e}", dp, s),
                }
            }
        }
    }
}
