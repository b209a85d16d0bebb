use subshift_mixedbuild::{materialize_and_check, plan_stages};

fn main() {
    let t = std::time::Instant::now();
    let plan = plan_stages("n^2", 2, 10_000_000).unwrap();
    for s in plan.summaries() {
        println!(
            "stage {}: k={} L={} low={} high={}",
            s.index, s.order, s.image_length, s.low, s.high
        );
    }
    let report = materialize_and_check(&plan).unwrap();
    for c in &report.checkpoints {
        println!(
            "stage {} {}: len={} value={:?} threshold={} [{}] -> {:?}",
            c.stage, c.kind, c.length, c.value, c.threshold, c.mechanism, c.outcome
        );
    }
    println!("lemma checks: {:?}", report.lemma_checks);
    println!("prefix_property={} interleaving={} recurrence={:?}", report.prefix_property, report.interleaving, report.recurrence_witness);
    println!("all_pass = {} in {:?}", report.all_pass, t.elapsed());
}
