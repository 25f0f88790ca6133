#pragma once

// Umbrella header: partitions, deletion decks, reconstruction, the
// brute-force oracle, and text round-tripping.

#include "partdeck/deletion.hpp"
#include "partdeck/enumerate.hpp"
#include "partdeck/errors.hpp"
#include "partdeck/oracle.hpp"
#include "partdeck/partition.hpp"
#include "partdeck/reconstruct.hpp"
#include "partdeck/text.hpp"
