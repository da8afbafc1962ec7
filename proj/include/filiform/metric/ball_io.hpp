#ifndef FILIFORM_METRIC_BALL_IO_HPP
#define FILIFORM_METRIC_BALL_IO_HPP

#include <cstdint>
#include <filesystem>
#include <iosfwd>

#include "filiform/metric/ball.hpp"

namespace filiform {

// Binary ball cache, all integers little-endian:
//   header : "FLBC" | u32 version | u32 dim | u32 radius | u64 entry count
//   record : (dim + 1) coordinates r, p_1..p_d, each as
//              u8 sign (0 = nonnegative, 1 = negative) | u32 byte count |
//              magnitude bytes, least significant first
//            then u32 distance.
// Records appear in canonical (distance, normal form) order.
inline constexpr char kBallMagic[4] = {'F', 'L', 'B', 'C'};
inline constexpr std::uint32_t kBallFormatVersion = 1;

void write_ball(const BallCache& ball, std::ostream& out);
BallCache read_ball(std::istream& in);

void save_ball(const BallCache& ball, const std::filesystem::path& path);
BallCache load_ball(const std::filesystem::path& path);

// <cache_dir>/ball_d<dim>_r<radius>.bin
std::filesystem::path ball_cache_path(const std::filesystem::path& cache_dir, std::size_t dim,
                                      std::uint32_t radius);

// CSV with header r,p_1,...,p_d,dist.
void export_ball_csv(const BallCache& ball, std::ostream& out);

}  // namespace filiform

#endif  // FILIFORM_METRIC_BALL_IO_HPP
