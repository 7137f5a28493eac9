use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Independent random substreams keyed by (seed, bout, slot).
///
/// Every member draws from its own stream in every bout, so a run's result
/// does not depend on how members are scheduled across worker threads.
#[derive(Debug, Clone, Copy)]
pub struct Streams {
    seed: u64,
}

/// Slot reserved for group-level draws (role assignment).
const CONTROL_SLOT: u64 = u32::MAX as u64;

impl Streams {
    pub fn new(seed: u64) -> Self {
        Self { seed }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// Stream owned by member `slot` during bout `bout` (0 is initialization).
    pub fn member(&self, bout: u64, slot: usize) -> ChaCha8Rng {
        self.stream(bout, slot as u64)
    }

    pub fn control(&self, bout: u64) -> ChaCha8Rng {
        self.stream(bout, CONTROL_SLOT)
    }

    fn stream(&self, bout: u64, slot: u64) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(bout);
        // 2^40 words of headroom per slot.
        rng.set_word_pos((slot as u128) << 40);
        rng
    }
}
