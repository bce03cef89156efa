use std::io::Write;

use latticehom::acceptance::{run_criterion, CRITERIA};
use latticehom::config::Guards;

fn main() {
    let only: Vec<u32> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let g = Guards::default();
    let mut failed = 0;
    for (id, _) in CRITERIA {
        if !only.is_empty() && !only.contains(&id) {
            continue;
        }
        let r = run_criterion(id, &g);
        println!("{}", r.line());
        std::io::stdout().flush().ok();
        failed += usize::from(!r.passed());
    }
    if failed > 0 {
        println!("{failed} criteria did not pass");
        std::process::exit(1);
    }
}
