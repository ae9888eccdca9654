public class BaseEntity {
    protected long id;
}
