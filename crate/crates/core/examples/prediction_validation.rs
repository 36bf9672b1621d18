// Proportional prediction: the training association matrix is the
// expected confusion matrix on held-out data.

use catassoc::predict::{split_validate, SplitConfig};
use catassoc::{fixtures, report};

fn main() -> catassoc::Result<()> {
    let ds = fixtures::table1().to_dataset()?;
    let mut cfg = SplitConfig::new(0.8, 7);
    cfg.stratify = true;
    let r = split_validate(&ds, &["X"], "Y", &cfg)?;
    println!("train {} / test {} records, {} unseen skipped", r.n_train, r.n_test, r.skipped_unseen);
    let labels = r.test_confusion.labels.clone();
    print!(
        "{}",
        report::side_by_side("train", "test", &labels, &r.train_gamma.gamma, &r.test_confusion.normalized)
    );
    for (label, d) in labels.iter().zip(r.row_diffs()) {
        if let Some(d) = d {
            println!("row {label}: largest gap {}", report::fmt4(d));
        }
    }
    Ok(())
}
