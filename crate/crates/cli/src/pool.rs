use rayon::ThreadPool;

/// Environment variable bounding the worker pool; 0 or unset uses every
/// available processor.
pub const THREADS_VAR: &str = "MU_BARGMANN_THREADS";

pub fn build() -> Result<ThreadPool, String> {
    let n = match std::env::var(THREADS_VAR) {
        Ok(v) => {
            v.trim().parse::<usize>().map_err(|_| format!("{THREADS_VAR} must be a nonnegative integer, got '{v}'"))?
        }
        Err(_) => 0,
    };
    rayon::ThreadPoolBuilder::new().num_threads(n).build().map_err(|e| e.to_string())
}
