#pragma once

#include <stdexcept>

namespace goldbach {

// A query needs primes beyond the sieve it was handed; extend the sieve and retry.
class CoverageError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

// The quantity is undefined for this input (no prime below 2, no bound below n = 10, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

}  // namespace goldbach
