#include <cstdio>

int main() {
  std::puts("discwalk: CLI not wired yet");
  return 1;
}
