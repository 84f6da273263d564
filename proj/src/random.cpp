#include "starslice/random.hpp"

namespace starslice {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

RandomSource::RandomSource(std::uint64_t seed) : seed_(seed), engine_(splitmix64(seed)) {}

double RandomSource::normal() { return normal_(engine_); }

double RandomSource::uniform() { return uniform_(engine_); }

RandomSource RandomSource::split(std::uint64_t index) const {
  return RandomSource(splitmix64(seed_ ^ splitmix64(index + 0x5851f42d4c957f2dULL)));
}

}  // namespace starslice
