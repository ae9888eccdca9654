public interface PlainContract {
    void open();

    void close();

    String status();
}
