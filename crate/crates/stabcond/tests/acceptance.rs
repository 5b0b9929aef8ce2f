//! One line per check, then one verdict per criterion group. Exits nonzero
//! if anything fails.

use std::time::Instant;

use stabcond::verify::{run, GROUPS};

fn main() {
    let mut failed = 0;
    for (g, title) in GROUPS {
        let t = Instant::now();
        let checks = run(&[g]);
        for c in &checks {
            let mark = if c.pass { "PASS" } else { "FAIL" };
            println!("[{mark}] {g}. {}: expected {} (exact), got {}", c.name, c.expected, c.got);
        }
        let bad = checks.iter().filter(|c| !c.pass).count();
        let verdict = if bad == 0 && !checks.is_empty() { "PASS" } else { "FAIL" };
        println!("== {verdict} criterion {g}: {title} ({} checks, {bad} failed, {:.1}s)", checks.len(), t.elapsed().as_secs_f64());
        if verdict == "FAIL" {
            failed += 1;
        }
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
    println!("all criteria passed");
}
