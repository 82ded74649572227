//! Worker-pool helper. Parallelism width comes from FFL_THREADS (default 1);
//! results are reduced in index order so output is identical at any width.

pub fn parallelism() -> usize {
    std::env::var("FFL_THREADS")
        .ok()
        .and_then(|s| s.parse::<usize>().ok())
        .filter(|&n| n >= 1)
        .unwrap_or(1)
}

/// Map a function over indexed jobs, possibly in parallel, collecting results
/// in input order.
pub fn par_map<T, F>(jobs: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync,
{
    let width = parallelism().min(jobs.max(1));
    if width <= 1 || jobs <= 1 {
        return (0..jobs).map(f).collect();
    }
    let mut out: Vec<Option<T>> = (0..jobs).map(|_| None).collect();
    let next = std::sync::atomic::AtomicUsize::new(0);
    let slots: Vec<std::sync::Mutex<&mut Option<T>>> =
        out.iter_mut().map(std::sync::Mutex::new).collect();
    std::thread::scope(|scope| {
        for _ in 0..width {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, std::sync::atomic::Ordering::SeqCst);
                if i >= jobs {
                    break;
                }
                let r = f(i);
                **slots[i].lock().unwrap() = Some(r);
            });
        }
    });
    out.into_iter().map(|r| r.unwrap()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn preserves_order() {
        let v = par_map(16, |i| i * i);
        assert_eq!(v, (0..16).map(|i| i * i).collect::<Vec<_>>());
    }
}
