use brsym::sweep::{run_sweep, SweepConfig};

fn main() {
    let config = SweepConfig::default();
    let t0 = std::time::Instant::now();
    let report = run_sweep(&config).unwrap();
    println!("total points: {}", report.points.len());
    println!("elapsed: {:?}", t0.elapsed());
    for pt in &report.points {
        if !pt.agree() {
            println!(
                "DISAGREE {:?} closed={} brute={}",
                pt.grid, pt.closed, pt.brute
            );
        }
    }
    println!("discrepancies: {}", report.disagreements());
}
