#include "mastermind/bridge/channel.hpp"

#include <fcntl.h>
#include <netdb.h>
#include <poll.h>
#include <signal.h>
#include <sys/socket.h>
#include <sys/types.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>
#include <thread>
#include <vector>

#include "mastermind/bridge/errors.hpp"

namespace mastermind::bridge {

namespace {

void ignore_sigpipe_once() {
  static const bool done = [] {
    ::signal(SIGPIPE, SIG_IGN);
    return true;
  }();
  (void)done;
}

std::string errno_text() { return std::strerror(errno); }

}  // namespace

std::unique_ptr<LineChannel> LineChannel::open(const EngineEndpoint& endpoint) {
  endpoint.validate();
  ignore_sigpipe_once();
  std::unique_ptr<LineChannel> ch(new LineChannel());

  if (endpoint.transport == EngineEndpoint::Transport::Subprocess) {
    int to_child[2], from_child[2], status[2];
    if (::pipe(to_child) != 0) throw ConnectFailed("pipe: " + errno_text());
    if (::pipe(from_child) != 0) {
      ::close(to_child[0]);
      ::close(to_child[1]);
      throw ConnectFailed("pipe: " + errno_text());
    }
    if (::pipe2(status, O_CLOEXEC) != 0) {
      for (int fd : {to_child[0], to_child[1], from_child[0], from_child[1]}) {
        ::close(fd);
      }
      throw ConnectFailed("pipe: " + errno_text());
    }
    std::vector<char*> argv;
    for (const auto& a : endpoint.command) {
      argv.push_back(const_cast<char*>(a.c_str()));
    }
    argv.push_back(nullptr);

    pid_t pid = ::fork();
    if (pid < 0) throw ConnectFailed("fork: " + errno_text());
    if (pid == 0) {
      ::dup2(to_child[0], STDIN_FILENO);
      ::dup2(from_child[1], STDOUT_FILENO);
      int devnull = ::open("/dev/null", O_WRONLY);
      if (devnull >= 0) ::dup2(devnull, STDERR_FILENO);
      ::close(to_child[0]);
      ::close(to_child[1]);
      ::close(from_child[0]);
      ::close(from_child[1]);
      ::close(status[0]);
      ::execvp(argv[0], argv.data());
      int err = errno;
      [[maybe_unused]] auto n = ::write(status[1], &err, sizeof err);
      ::_exit(127);
    }
    ::close(to_child[0]);
    ::close(from_child[1]);
    ::close(status[1]);
    ch->child_pid_ = pid;
    ch->write_fd_ = to_child[1];
    ch->read_fd_ = from_child[0];
    int err = 0;
    ssize_t n = ::read(status[0], &err, sizeof err);
    ::close(status[0]);
    if (n == static_cast<ssize_t>(sizeof err)) {
      throw ConnectFailed("cannot start '" + endpoint.describe() +
                          "': " + std::strerror(err));
    }
    return ch;
  }

  addrinfo hints{};
  hints.ai_family = AF_UNSPEC;
  hints.ai_socktype = SOCK_STREAM;
  addrinfo* res = nullptr;
  const std::string port = std::to_string(endpoint.port);
  if (::getaddrinfo(endpoint.host.c_str(), port.c_str(), &hints, &res) != 0) {
    throw ConnectFailed("cannot resolve " + endpoint.describe());
  }
  std::string last_error = "no address";
  for (addrinfo* ai = res; ai; ai = ai->ai_next) {
    int fd = ::socket(ai->ai_family, ai->ai_socktype | SOCK_CLOEXEC,
                      ai->ai_protocol);
    if (fd < 0) continue;
    int flags = ::fcntl(fd, F_GETFL);
    ::fcntl(fd, F_SETFL, flags | O_NONBLOCK);
    int rc = ::connect(fd, ai->ai_addr, ai->ai_addrlen);
    if (rc != 0 && errno == EINPROGRESS) {
      pollfd p{fd, POLLOUT, 0};
      rc = ::poll(&p, 1, endpoint.connect_timeout_ms);
      if (rc == 1) {
        int so_error = 0;
        socklen_t len = sizeof so_error;
        ::getsockopt(fd, SOL_SOCKET, SO_ERROR, &so_error, &len);
        rc = so_error == 0 ? 0 : -1;
        if (so_error) errno = so_error;
      } else {
        if (rc == 0) errno = ETIMEDOUT;
        rc = -1;
      }
    }
    if (rc == 0) {
      ::fcntl(fd, F_SETFL, flags);
      ch->read_fd_ = fd;
      ch->write_fd_ = fd;
      break;
    }
    last_error = errno_text();
    ::close(fd);
  }
  ::freeaddrinfo(res);
  if (ch->read_fd_ < 0) {
    throw ConnectFailed("cannot connect to " + endpoint.describe() + ": " +
                        last_error);
  }
  return ch;
}

LineChannel::~LineChannel() {
  if (write_fd_ >= 0 && write_fd_ != read_fd_) ::close(write_fd_);
  if (read_fd_ >= 0) ::close(read_fd_);
  if (child_pid_ > 0) {
    for (int i = 0; i < 20; ++i) {
      if (::waitpid(child_pid_, nullptr, WNOHANG) == child_pid_) return;
      std::this_thread::sleep_for(std::chrono::milliseconds(5));
    }
    ::kill(child_pid_, SIGKILL);
    ::waitpid(child_pid_, nullptr, 0);
  }
}

void LineChannel::write_line(std::string_view line) {
  std::string data(line);
  data += '\n';
  std::size_t off = 0;
  const bool socket = child_pid_ < 0;
  while (off < data.size()) {
    ssize_t n = socket ? ::send(write_fd_, data.data() + off, data.size() - off,
                                MSG_NOSIGNAL)
                       : ::write(write_fd_, data.data() + off,
                                 data.size() - off);
    if (n < 0) {
      if (errno == EINTR) continue;
      throw ConnectionClosed("write failed: " + errno_text());
    }
    off += static_cast<std::size_t>(n);
  }
}

std::optional<std::string> LineChannel::read_line(
    std::chrono::milliseconds timeout) {
  const auto deadline = std::chrono::steady_clock::now() + timeout;
  while (true) {
    auto nl = buffer_.find('\n');
    if (nl != std::string::npos) {
      std::string line = buffer_.substr(0, nl);
      buffer_.erase(0, nl + 1);
      if (!line.empty() && line.back() == '\r') line.pop_back();
      return line;
    }
    auto left = std::chrono::duration_cast<std::chrono::milliseconds>(
        deadline - std::chrono::steady_clock::now());
    if (left.count() <= 0) return std::nullopt;
    pollfd p{read_fd_, POLLIN, 0};
    int rc = ::poll(&p, 1, static_cast<int>(left.count()));
    if (rc < 0) {
      if (errno == EINTR) continue;
      throw ConnectionClosed("poll failed: " + errno_text(), buffer_);
    }
    if (rc == 0) return std::nullopt;
    char chunk[4096];
    ssize_t n = ::read(read_fd_, chunk, sizeof chunk);
    if (n < 0) {
      if (errno == EINTR) continue;
      throw ConnectionClosed("read failed: " + errno_text(), buffer_);
    }
    if (n == 0) throw ConnectionClosed("engine closed the stream", buffer_);
    buffer_.append(chunk, static_cast<std::size_t>(n));
  }
}

}  // namespace mastermind::bridge
